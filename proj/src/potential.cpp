#include "glvortex/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "glvortex/errors.hpp"
#include "glvortex/rng.hpp"

namespace glv {

PotentialSpec PotentialSpec::quadratic() {
  PotentialSpec p;
  p.kind = PotentialKind::Quadratic;
  p.selector = "quadratic";
  return p;
}

PotentialSpec PotentialSpec::huber(double delta) {
  if (!(delta > 0.0)) throw ConfigError("huber delta must be positive");
  PotentialSpec p;
  p.kind = PotentialKind::Huber;
  p.delta = delta;
  std::ostringstream os;
  os << "huber:" << delta;
  p.selector = os.str();
  return p;
}

PotentialSpec PotentialSpec::custom(std::vector<PotentialSample> rows) {
  if (rows.size() < 2) throw ConfigError("custom potential needs >= 2 samples");
  std::sort(rows.begin(), rows.end(),
            [](const PotentialSample& a, const PotentialSample& b) { return a.t < b.t; });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].t > rows[i - 1].t))
      throw ConfigError("custom potential grid must be strictly increasing");
  if (rows.back().t > 1.0 + 1e-12)
    throw ConfigError("custom potential grid exceeds the domain (-inf, 1]");
  PotentialSpec p;
  p.kind = PotentialKind::CustomSampled;
  p.samples = std::move(rows);
  p.selector = "file:<memory>";
  return p;
}

namespace {

void require_in_domain(const PotentialSpec& p, double t) {
  if (!(t <= 1.0)) throw InputError("potential argument t > 1 is outside the domain");
  if (p.kind == PotentialKind::CustomSampled) {
    if (t < p.samples.front().t - 1e-12 || t > p.samples.back().t + 1e-12)
      throw InputError("custom potential evaluated outside its tabulated range");
  }
}

// Index of the interpolation cell containing t.
std::size_t cell_of(const std::vector<PotentialSample>& s, double t) {
  auto it = std::upper_bound(s.begin(), s.end(), t,
                             [](double v, const PotentialSample& row) { return v < row.t; });
  std::size_t hi = static_cast<std::size_t>(it - s.begin());
  if (hi == 0) hi = 1;
  if (hi == s.size()) hi = s.size() - 1;
  return hi - 1;
}

double lerp_field(const std::vector<PotentialSample>& s, double t, bool deriv) {
  std::size_t i = cell_of(s, t);
  const double t0 = s[i].t, t1 = s[i + 1].t;
  const double y0 = deriv ? s[i].dW : s[i].W;
  const double y1 = deriv ? s[i + 1].dW : s[i + 1].W;
  const double w = (t - t0) / (t1 - t0);
  return y0 + w * (y1 - y0);
}

}  // namespace

double eval_W(const PotentialSpec& p, double t) {
  require_in_domain(p, t);
  switch (p.kind) {
    case PotentialKind::Quadratic:
      return 0.5 * t * t;
    case PotentialKind::Huber: {
      const double a = std::abs(t);
      if (a <= p.delta) return 0.5 * t * t;
      return p.delta * a - 0.5 * p.delta * p.delta;
    }
    case PotentialKind::CustomSampled:
      return lerp_field(p.samples, t, false);
  }
  throw InputError("unknown potential kind");
}

double eval_dW(const PotentialSpec& p, double t) {
  require_in_domain(p, t);
  switch (p.kind) {
    case PotentialKind::Quadratic:
      return t;
    case PotentialKind::Huber: {
      if (std::abs(t) <= p.delta) return t;
      return t > 0.0 ? p.delta : -p.delta;
    }
    case PotentialKind::CustomSampled:
      return lerp_field(p.samples, t, true);
  }
  throw InputError("unknown potential kind");
}

AdmissibilityReport check_admissible(const PotentialSpec& p, int n_samples,
                                     std::uint64_t seed, double T) {
  if (n_samples < 3) throw InputError("check_admissible needs n_samples >= 3");
  if (!(T > 0.0)) throw InputError("sampling window T must be positive");

  double lo = -T, hi = 1.0;
  if (p.kind == PotentialKind::CustomSampled) {
    lo = std::max(lo, p.samples.front().t);
    hi = std::min(hi, p.samples.back().t);
  }

  std::vector<double> ts;
  ts.reserve(static_cast<std::size_t>(n_samples) + 8);
  ts.push_back(lo);
  ts.push_back(hi);
  if (lo <= 0.0 && 0.0 <= hi) ts.push_back(0.0);
  if (p.kind == PotentialKind::CustomSampled) {
    for (const auto& row : p.samples)
      if (row.t >= lo && row.t <= hi) ts.push_back(row.t);
  }
  SplitMix64 rng(seed);
  while (static_cast<int>(ts.size()) < n_samples) ts.push_back(lo + (hi - lo) * rng.uniform01());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  AdmissibilityReport rep;
  std::vector<double> W(ts.size()), dW(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    W[i] = eval_W(p, ts[i]);
    dW[i] = eval_dW(p, ts[i]);
  }

  double scale = 1.0;
  for (double w : W) scale = std::max(scale, std::abs(w));
  const double tol = 1e-12 * scale;

  if (lo <= 0.0 && 0.0 <= hi && std::abs(eval_W(p, 0.0)) > tol) rep.zero_at_origin = false;

  double worst_W = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (std::abs(ts[i]) <= 1e-12) continue;
    if (W[i] <= tol && W[i] - tol < worst_W) {
      worst_W = W[i] - tol;
      rep.positive = false;
      rep.worst_positivity_t = ts[i];
      rep.worst_positivity_W = W[i];
    }
  }

  for (std::size_t i = 0; i + 2 < ts.size(); ++i) {
    const double s12 = (W[i + 1] - W[i]) / (ts[i + 1] - ts[i]);
    const double s23 = (W[i + 2] - W[i + 1]) / (ts[i + 2] - ts[i + 1]);
    const double violation = s12 - s23;
    if (violation > tol && violation > rep.worst_secant_violation) {
      rep.secant_convex = false;
      rep.worst_secant_violation = violation;
      rep.worst_secant_triple = {ts[i], ts[i + 1], ts[i + 2]};
    }
  }

  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const double drop = dW[i] - dW[i + 1];
    if (drop > tol && drop > rep.worst_monotone_drop) {
      rep.dW_monotone = false;
      rep.worst_monotone_drop = drop;
      rep.worst_monotone_t = ts[i + 1];
    }
  }
  return rep;
}

PotentialSpec parse_potential(const std::string& selector) {
  if (selector == "quadratic") return PotentialSpec::quadratic();
  if (selector.rfind("huber:", 0) == 0) {
    const std::string arg = selector.substr(6);
    std::size_t used = 0;
    double delta = 0.0;
    try {
      delta = std::stod(arg, &used);
    } catch (const std::exception&) {
      throw ConfigError("bad huber delta in potential selector: " + selector);
    }
    if (used != arg.size()) throw ConfigError("bad huber delta in potential selector: " + selector);
    auto p = PotentialSpec::huber(delta);
    p.selector = selector;
    return p;
  }
  if (selector.rfind("file:", 0) == 0) {
    auto p = load_potential_csv(selector.substr(5));
    p.selector = selector;
    return p;
  }
  throw ConfigError("unknown potential selector: " + selector);
}

PotentialSpec load_potential_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open potential file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty potential file: " + path);
  // Tolerate an optional BOM and whitespace around the header.
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line = line.substr(3);
  std::string header;
  for (char c : line)
    if (!isspace(static_cast<unsigned char>(c))) header.push_back(c);
  if (header != "t,W,dW") throw ConfigError("potential CSV must start with header t,W,dW");

  std::vector<PotentialSample> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    PotentialSample s{};
    char c1 = 0, c2 = 0;
    if (!(ls >> s.t >> c1 >> s.W >> c2 >> s.dW) || c1 != ',' || c2 != ',')
      throw ConfigError("bad potential CSV row: " + line);
    rows.push_back(s);
  }
  auto p = PotentialSpec::custom(std::move(rows));
  p.selector = "file:" + path;
  return p;
}

}  // namespace glv
