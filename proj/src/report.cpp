#include "trihull/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "trihull/errors.hpp"

namespace trihull {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ReportWriter& ReportWriter::field(std::string_view key, std::string_view value) {
  out_.append(key).append(" ").append(value).append("\n");
  return *this;
}

ReportWriter& ReportWriter::field(std::string_view key, double value) { return field(key, format_real(value)); }

ReportWriter& ReportWriter::field(std::string_view key, std::size_t value) {
  return field(key, std::string_view(std::to_string(value)));
}

ReportWriter& ReportWriter::field(std::string_view key, std::span<const double> values) {
  out_.append(key);
  for (double v : values) out_.append(" ").append(format_real(v));
  out_.append("\n");
  return *this;
}

ReportWriter& ReportWriter::terms(std::string_view key, const SpectraplexPoint& x) {
  field(std::string(key) + "s", x.size());
  for (const auto& t : x.terms()) {
    out_.append(key).append(" ").append(format_real(t.weight));
    for (double v : t.direction) out_.append(" ").append(format_real(v));
    out_.append("\n");
  }
  return *this;
}

std::string format_certificate(const Certificate& cert, std::string_view kind) {
  ReportWriter w;
  w.field("kind", kind)
      .field("status", to_string(cert.kind))
      .field("epsilon", cert.epsilon)
      .field("radius_bound", cert.radius_bound)
      .field("gap", cert.gap)
      .field("iterations", cert.iterations)
      .field("oracle_calls", cert.oracle_calls)
      .field("cache_pivots", cert.stats.cache_pivots)
      .field("cache_size", cert.pivots.size())
      .field("prunes", cert.stats.prunes)
      .field("max_terms", cert.stats.max_terms)
      .field("low_rank_bound", low_rank_bound(cert.point.is_bound() ? cert.point.image().size() : 0))
      .field("order", cert.point.order());
  if (cert.point.is_bound()) w.field("image", cert.point.image());
  w.terms("term", cert.point);
  if (cert.hyperplane) {
    w.field("hyperplane_normal", cert.hyperplane->normal).field("hyperplane_offset", cert.hyperplane->offset);
  }
  if (cert.eig_margin) w.field("eig_margin", *cert.eig_margin);
  return w.str();
}

std::string format_chm_result(const ChmResult& res, double epsilon) {
  ReportWriter w;
  w.field("kind", std::string_view("chm"))
      .field("status", to_string(res.verdict))
      .field("epsilon", epsilon)
      .field("radius", res.radius)
      .field("gap", res.gap)
      .field("iterations", res.iterations)
      .field("strict_fallbacks", res.strict_fallbacks)
      .field("epsilon_property_steps", res.epsilon_property_steps)
      .field("current", res.current)
      .field("coeffs", res.coeffs);
  if (res.hyperplane) {
    w.field("hyperplane_normal", res.hyperplane->normal).field("hyperplane_offset", res.hyperplane->offset);
  }
  return w.str();
}

std::string format_pair_certificate(const PairCertificate& cert) {
  ReportWriter w;
  w.field("kind", std::string_view("svm"))
      .field("status", to_string(cert.kind))
      .field("epsilon", cert.epsilon)
      .field("scale", cert.scale)
      .field("gap", cert.pair.gap)
      .field("iterations", cert.iterations)
      .field("oracle_calls", cert.oracle_calls)
      .field("left_image", cert.pair.left.image())
      .field("right_image", cert.pair.right.image())
      .field("left_order", cert.pair.left.order())
      .field("right_order", cert.pair.right.order());
  w.terms("left_term", cert.pair.left);
  w.terms("right_term", cert.pair.right);
  if (cert.hyperplane) {
    w.field("hyperplane_normal", cert.hyperplane->normal).field("hyperplane_offset", cert.hyperplane->offset);
  }
  if (cert.left_margin) w.field("left_eig_margin", *cert.left_margin);
  if (cert.right_margin) w.field("right_eig_margin", *cert.right_margin);
  return w.str();
}

std::string format_maxcut_result(const MaxCutResult& res, double epsilon) {
  ReportWriter w;
  w.field("kind", std::string_view("maxcut"))
      .field("status", std::string_view(res.complete ? "complete" : "aborted"))
      .field("epsilon", epsilon)
      .field("sdp_value", res.sdp_value)
      .field("bracket_lo", res.bracket_lo)
      .field("bracket_hi", res.bracket_hi)
      .field("probes", res.trace.size());
  for (const auto& p : res.trace) {
    w.field("probe", std::string_view(format_real(p.w) + " " + to_string(p.verdict) + " " + format_real(p.gap) + " " +
                                      std::to_string(p.iterations) + " " + std::to_string(p.oracle_calls)));
  }
  const auto y = res.y_matrix();
  Vector diag(y.order());
  for (std::size_t i = 0; i < y.order(); ++i) diag[i] = y(i, i);
  w.field("y_diagonal", diag);
  w.field("order", res.x.order());
  w.terms("x_term", res.x);
  return w.str();
}

std::string format_sdp_result(const Certificate& cert, const PrimalRecovery& recovery) {
  std::string out = format_certificate(cert, "sdp");
  ReportWriter w;
  w.field("alpha", recovery.alpha);
  if (recovery.primal) {
    const auto& x = *recovery.primal;
    w.field("primal_order", x.order());
    for (std::size_t i = 0; i < x.order(); ++i) w.field("primal_row", x.row(i));
  }
  if (!recovery.diagnostic.empty()) w.field("diagnostic", std::string_view(recovery.diagnostic));
  return out + w.str();
}

// ---------------------------------------------------------------------------

ParsedReport ParsedReport::parse(std::string_view text) {
  ParsedReport r;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::vector<std::string> values;
    for (std::string tok; ls >> tok;) values.push_back(tok);
    r.lines_[key].push_back(std::move(values));
  }
  return r;
}

const std::string& ParsedReport::value(const std::string& key) const {
  auto it = lines_.find(key);
  if (it == lines_.end() || it->second.front().empty()) throw ParseError(0, 0, "report has no '" + key + "'");
  return it->second.front().front();
}

namespace {

double to_real(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw ParseError(0, 0, "not a number: '" + s + "'");
  return v;
}

}  // namespace

double ParsedReport::real(const std::string& key) const { return to_real(value(key)); }

Vector ParsedReport::reals(const std::string& key) const {
  auto it = lines_.find(key);
  if (it == lines_.end()) throw ParseError(0, 0, "report has no '" + key + "'");
  Vector out;
  for (const auto& s : it->second.front()) out.push_back(to_real(s));
  return out;
}

SpectraplexPoint ParsedReport::point(const std::string& key) const {
  auto it = lines_.find(key);
  if (it == lines_.end()) throw ParseError(0, 0, "report has no '" + key + "' lines");
  std::vector<std::pair<double, Vector>> terms;
  std::size_t n = 0;
  for (const auto& values : it->second) {
    if (values.size() < 2) throw ParseError(0, 0, "term line too short");
    Vector v;
    for (std::size_t k = 1; k < values.size(); ++k) v.push_back(to_real(values[k]));
    n = v.size();
    terms.emplace_back(to_real(values[0]), std::move(v));
  }
  return SpectraplexPoint(n, std::move(terms));
}

}  // namespace trihull
