#include "geocurv/classify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

namespace geocurv {

namespace {

std::string index_str(const std::vector<int>& idx) {
  std::string s = "[";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i] + 1);  // user-facing indices are 1-based
  }
  return s + "]";
}

// ------------------------------------------------------------ linear solve

struct LinRow {
  std::vector<RatFunc> a;
  RatFunc rhs;
  std::vector<int> origin;
};

struct LinOutcome {
  bool consistent = true;
  std::vector<RatFunc> x;           // free unknowns fixed at zero
  std::vector<int> bad_origin;      // original tuple with nonzero residual
  RatFunc bad_residual;
};

/// Exact Gauss-Jordan elimination over the rational-function field with
/// pivoting on symbolically nonzero entries. On inconsistency the returned
/// x solves the consistent part, and bad_origin names an original equation
/// whose residual stays nonzero under that (and hence every) solution of
/// the reduced system.
LinOutcome solve_linear(const std::vector<LinRow>& original, int unknowns,
                        const Chart& chart) {
  std::vector<LinRow> rows;
  for (const LinRow& r : original) {
    bool live = !r.rhs.is_zero();
    for (const RatFunc& c : r.a) live = live || !c.is_zero();
    if (live) rows.push_back(r);
  }
  std::vector<int> pivot_row(unknowns, -1);
  std::vector<bool> used(rows.size(), false);
  for (int col = 0; col < unknowns; ++col) {
    int pr = -1;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!used[r] && !rows[r].a[col].is_zero()) {
        pr = static_cast<int>(r);
        break;
      }
    if (pr < 0) continue;
    pivot_row[col] = pr;
    used[pr] = true;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == pr || rows[r].a[col].is_zero()) continue;
      RatFunc m = rows[r].a[col] / rows[pr].a[col];
      for (int c = 0; c < unknowns; ++c)
        rows[r].a[c] = rows[r].a[c] - m * rows[pr].a[c];
      rows[r].rhs = rows[r].rhs - m * rows[pr].rhs;
    }
  }
  LinOutcome out;
  out.x.assign(unknowns, chart.rf_zero());
  for (int col = 0; col < unknowns; ++col)
    if (pivot_row[col] >= 0)
      out.x[col] = rows[pivot_row[col]].rhs / rows[pivot_row[col]].a[col];
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!used[r] && !rows[r].rhs.is_zero()) {
      out.consistent = false;
      break;
    }
  if (!out.consistent) {
    for (const LinRow& r : original) {
      RatFunc res = -r.rhs;
      for (int c = 0; c < unknowns; ++c) res = res + r.a[c] * out.x[c];
      if (!res.is_zero()) {
        out.bad_origin = r.origin;
        out.bad_residual = res;
        break;
      }
    }
  }
  return out;
}

// -------------------------------------------------------- numeric sampling

/// A random evaluation point over the chart's polynomial variable universe:
/// coordinates and parameters are rationals in [2, 100] with denominator at
/// most 10; sin/cos variables carry the sine/cosine of their coordinate.
std::vector<double> sample_point(const Chart& chart, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dend(1, 10);
  auto draw = [&]() {
    int q = dend(rng);
    std::uniform_int_distribution<long> numd(2L * q, 100L * q);
    return static_cast<double>(numd(rng)) / q;
  };
  std::vector<double> pt(chart.varset()->size(), 0.0);
  for (int i = 0; i < chart.dim(); ++i) {
    double x = draw();
    pt[chart.symbol_var(chart.coords()[i])] = x;
    pt[chart.sin_var(i)] = std::sin(x);
    pt[chart.cos_var(i)] = std::cos(x);
  }
  for (const std::string& p : chart.params()) pt[chart.symbol_var(p)] = draw();
  return pt;
}

int numeric_rank(const std::vector<std::vector<double>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<double>> a = m;
  double maxabs = 0;
  for (const auto& row : a)
    for (double v : row) maxabs = std::max(maxabs, std::fabs(v));
  if (maxabs == 0) return 0;
  const double tol = 1e-9 * maxabs;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int best = -1;
    for (int r = rank; r < n; ++r)
      if (best < 0 || std::fabs(a[r][col]) > std::fabs(a[best][col])) best = r;
    if (best < 0 || std::fabs(a[best][col]) <= tol) continue;
    std::swap(a[rank], a[best]);
    for (int r = rank + 1; r < n; ++r) {
      double f = a[r][col] / a[rank][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

RatFunc minor_det(const std::vector<std::vector<RatFunc>>& m,
                  const std::vector<int>& rows, const std::vector<int>& cols,
                  const Chart& chart) {
  const int r = static_cast<int>(rows.size());
  if (r == 0) return chart.rf_one();
  if (r == 1) return m[rows[0]][cols[0]];
  RatFunc det = chart.rf_zero();
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (int k = 0; k < r; ++k) {
    if (m[rows[0]][cols[k]].is_zero()) continue;
    std::vector<int> sub_cols;
    for (int c = 0; c < r; ++c)
      if (c != k) sub_cols.push_back(cols[c]);
    RatFunc term = m[rows[0]][cols[k]] * minor_det(m, sub_rows, sub_cols, chart);
    det = (k % 2 == 0) ? det + term : det - term;
  }
  return det;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - (k - i)) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> iota_vec(int k) {
  std::vector<int> v(k);
  for (int i = 0; i < k; ++i) v[i] = i;
  return v;
}

}  // namespace

std::string Witness::str() const {
  return index_str(index) + " = " + value.str();
}

// --------------------------------------------------------- pseudosymmetry

ProportionalityResult pseudosymmetry_factor(const TensorField& e_dot_f,
                                            const TensorField& q_zf) {
  const Chart& chart = e_dot_f.chart();
  ProportionalityResult res;
  std::optional<std::vector<int>> pivot;
  e_dot_f.for_each_index([&](const std::vector<int>& idx) {
    if (!pivot && !is_zero(q_zf.at(idx), chart)) pivot = idx;
  });
  if (!pivot) {
    std::optional<std::vector<int>> bad;
    e_dot_f.for_each_index([&](const std::vector<int>& idx) {
      if (!bad && !is_zero(e_dot_f.at(idx), chart)) bad = idx;
    });
    if (!bad) {
      res.kind = Proportionality::BothZero;
    } else {
      res.kind = Proportionality::NotProportional;
      res.witness = Witness{*bad, simplified(e_dot_f.at(*bad), chart)};
    }
    return res;
  }
  Expr f = simplified(e_dot_f.at(*pivot) / q_zf.at(*pivot), chart);
  std::optional<std::vector<int>> bad;
  e_dot_f.for_each_index([&](const std::vector<int>& idx) {
    if (!bad && !is_zero(e_dot_f.at(idx) - f * q_zf.at(idx), chart)) bad = idx;
  });
  if (bad) {
    res.kind = Proportionality::NotProportional;
    res.witness =
        Witness{*bad, simplified(e_dot_f.at(*bad) - f * q_zf.at(*bad), chart)};
  } else {
    res.kind = Proportionality::Factor;
    res.factor = f;
  }
  return res;
}

SemisymmetryResult semisymmetry_check(const TensorField& e_dot_f) {
  const Chart& chart = e_dot_f.chart();
  SemisymmetryResult res{true, std::nullopt};
  e_dot_f.for_each_index([&](const std::vector<int>& idx) {
    if (res.zero && !is_zero(e_dot_f.at(idx), chart)) {
      res.zero = false;
      res.witness = Witness{idx, simplified(e_dot_f.at(idx), chart)};
    }
  });
  return res;
}

// ------------------------------------------------------------------ ranks

RankResult quasi_einstein_rank(const CurvatureBundle& bundle, const Expr& alpha,
                               std::uint64_t seed) {
  const Chart& chart = bundle.chart();
  const int n = bundle.dim();
  std::vector<std::vector<RatFunc>> m(n, std::vector<RatFunc>(n, chart.rf_zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i][j] = canonical(bundle.ric().at({i, j}) - alpha * bundle.metric().g(i, j),
                          chart);
  RankResult res{0, {}, {}};
  for (int r = n; r >= 1 && res.rank == 0; --r) {
    std::vector<int> rows = iota_vec(r);
    do {
      std::vector<int> cols = iota_vec(r);
      do {
        if (!minor_det(m, rows, cols, chart).is_zero()) {
          res.rank = r;
          res.minor_rows = rows;
          res.minor_cols = cols;
          break;
        }
      } while (next_combination(cols, n));
      if (res.rank) break;
    } while (next_combination(rows, n));
  }
  // numeric confirmation at seeded random sample points
  std::mt19937_64 rng(seed);
  int confirmed = 0, attempts = 0;
  while (confirmed < 5 && attempts < 200) {
    ++attempts;
    std::vector<double> pt = sample_point(chart, rng);
    std::vector<std::vector<double>> num(n, std::vector<double>(n, 0.0));
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        try {
          num[i][j] = m[i][j].eval(pt);
        } catch (const PoleError&) {
          ok = false;
        }
      }
    if (!ok) continue;  // pole hit: resample
    if (numeric_rank(num) == res.rank) ++confirmed;
  }
  if (confirmed < 5)
    throw std::runtime_error(
        "quasi_einstein_rank: numeric confirmation failed to reach the "
        "symbolic rank");
  return res;
}

// --------------------------------------------------------- Einstein levels

EinsteinLevelResult einstein_level(const CurvatureBundle& bundle, int level) {
  if (level < 2 || level > 4)
    throw std::invalid_argument("einstein_level supports levels 2..4");
  const Chart& chart = bundle.chart();
  const int n = bundle.dim();
  const int unknowns = level;
  std::vector<LinRow> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LinRow row;
      row.origin = {i, j};
      for (int t = 0; t < unknowns; ++t) {
        // coefficient tensors Ric^{level-1}, ..., Ric, g
        int power = level - 1 - t;
        Expr coeff = power == 0 ? bundle.metric().g(i, j)
                                : bundle.ricci_power(power).at({i, j});
        row.a.push_back(canonical(coeff, chart));
      }
      row.rhs = canonical(-bundle.ricci_power(level).at({i, j}), chart);
      rows.push_back(std::move(row));
    }
  LinOutcome out = solve_linear(rows, unknowns, chart);
  EinsteinLevelResult res;
  res.satisfied = out.consistent;
  for (const RatFunc& x : out.x) res.lambdas.push_back(from_ratfunc(x, chart));
  if (!out.consistent)
    res.witness = Witness{out.bad_origin, from_ratfunc(out.bad_residual, chart)};
  return res;
}

// ------------------------------------------------------------- Roter types

RoterResult roter_solve(const CurvatureBundle& bundle, bool generalized) {
  const Chart& chart = bundle.chart();
  const int n = bundle.dim();
  TensorField g = bundle.metric_tensor();
  const TensorField& ric = bundle.ric();
  const TensorField& ric2 = bundle.ricci_power(2);
  std::vector<TensorField> basis;
  if (generalized) {
    basis.push_back(kulkarni_nomizu(ric2, ric2));
    basis.push_back(kulkarni_nomizu(ric, ric2));
    basis.push_back(kulkarni_nomizu(g, ric2));
  }
  basis.push_back(kulkarni_nomizu(ric, ric));
  basis.push_back(kulkarni_nomizu(g, ric));
  basis.push_back(kulkarni_nomizu(g, g));
  const int unknowns = static_cast<int>(basis.size());
  std::vector<LinRow> rows;
  bundle.riemann().for_each_index([&](const std::vector<int>& t) {
    LinRow row;
    row.origin = t;
    for (const TensorField& b : basis) row.a.push_back(canonical(b.at(t), chart));
    row.rhs = canonical(bundle.riemann().at(t), chart);
    rows.push_back(std::move(row));
  });
  LinOutcome out = solve_linear(rows, unknowns, chart);
  RoterResult res;
  res.solvable = out.consistent;
  if (out.consistent) {
    for (const RatFunc& x : out.x) res.mu.push_back(from_ratfunc(x, chart));
  } else {
    res.certificate =
        Witness{out.bad_origin, from_ratfunc(out.bad_residual, chart)};
  }
  return res;
}

// ------------------------------------------------- Codazzi / cyclic checks

CodazziCyclicResult ricci_codazzi_cyclic(const CurvatureBundle& bundle) {
  const Chart& chart = bundle.chart();
  const int n = bundle.dim();
  const TensorField& nr = bundle.nabla_ricci();
  CodazziCyclicResult res{true, std::nullopt, true, std::nullopt};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (res.codazzi && i < j) {
          Expr d = nr.at({i, j, k}) - nr.at({j, i, k});
          if (!is_zero(d, chart)) {
            res.codazzi = false;
            res.codazzi_witness = Witness{{i, j, k}, simplified(d, chart)};
          }
        }
        if (res.cyclic_parallel && i <= j && j <= k) {
          Expr s = nr.at({i, j, k}) + nr.at({j, k, i}) + nr.at({k, i, j});
          if (!is_zero(s, chart)) {
            res.cyclic_parallel = false;
            res.cyclic_witness = Witness{{i, j, k}, simplified(s, chart)};
          }
        }
      }
  return res;
}

// ----------------------------------------------------------- compatibility

CompatibilityResult compatibility_check(const CurvatureBundle& bundle,
                                        const TensorField& z,
                                        const TensorField& t) {
  if (z.covariant_slots() != 2 || z.has_contravariant_slot())
    throw ValenceError("compatibility_check requires a (0,2) tensor Z");
  const Chart& chart = bundle.chart();
  const int n = bundle.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!is_zero(z.at({i, j}) - z.at({j, i}), chart))
        throw ValenceError("compatibility_check requires a symmetric Z");
  const MetricSpec& metric = bundle.metric();
  std::vector<std::vector<Expr>> zup(n, std::vector<Expr>(n, Expr(Rational(0))));
  for (int a = 0; a < n; ++a)
    for (int y = 0; y < n; ++y) {
      Expr s(Rational(0));
      for (int b = 0; b < n; ++b) {
        if (metric.diagonal() && b != a) continue;
        s = s + metric.ginv(a, b) * z.at({b, y});
      }
      zup[a][y] = simplified(s, chart);
    }
  CompatibilityResult res{true, std::nullopt};
  for (int y1 = 0; y1 < n && res.compatible; ++y1)
    for (int y2 = 0; y2 < n && res.compatible; ++y2)
      for (int y3 = 0; y3 < n && res.compatible; ++y3)
        for (int u = 0; u < n && res.compatible; ++u) {
          Expr s(Rational(0));
          const int cyc[3][3] = {{y1, y2, y3}, {y2, y3, y1}, {y3, y1, y2}};
          for (const auto& p : cyc)
            for (int a = 0; a < n; ++a) {
              if (zup[a][p[0]].is_zero_literal()) continue;
              s = s + zup[a][p[0]] * t.at({a, u, p[1], p[2]});
            }
          if (!is_zero(s, chart)) {
            res.compatible = false;
            res.witness = Witness{{y1, y2, y3, u}, simplified(s, chart)};
          }
        }
  return res;
}

// -------------------------------------------------------------- recurrence

namespace {

Expr recurrence_lhs(const TensorField& nabla_e, int y1, int y2, int y3, int u,
                    int y) {
  return nabla_e.at({y1, y2, y3, u, y}) + nabla_e.at({y2, y3, y1, u, y}) +
         nabla_e.at({y3, y1, y2, u, y});
}

Expr recurrence_rhs(const TensorField& e, const OneFormField& sigma, int y1,
                    int y2, int y3, int u, int y) {
  return sigma.components[y1] * e.at({y2, y3, u, y}) +
         sigma.components[y2] * e.at({y3, y1, u, y}) +
         sigma.components[y3] * e.at({y1, y2, u, y});
}

}  // namespace

RecurrenceResult recurrent_two_forms(const CurvatureBundle& bundle,
                                     const TensorField& e,
                                     const TensorField& nabla_e,
                                     const OneFormField& sigma) {
  const Chart& chart = bundle.chart();
  const int n = bundle.dim();
  RecurrenceResult res{true, std::nullopt};
  for (int y1 = 0; y1 < n && res.holds; ++y1)
    for (int y2 = 0; y2 < n && res.holds; ++y2)
      for (int y3 = 0; y3 < n && res.holds; ++y3)
        for (int u = 0; u < n && res.holds; ++u)
          for (int y = 0; y < n && res.holds; ++y) {
            Expr d = recurrence_lhs(nabla_e, y1, y2, y3, u, y) -
                     recurrence_rhs(e, sigma, y1, y2, y3, u, y);
            if (!is_zero(d, chart)) {
              res.holds = false;
              res.witness = Witness{{y1, y2, y3, u, y}, simplified(d, chart)};
            }
          }
  return res;
}

RecurrenceSolveResult solve_recurrence_form(const CurvatureBundle& bundle,
                                            const TensorField& e,
                                            const TensorField& nabla_e) {
  const Chart& chart = bundle.chart();
  const int n = bundle.dim();
  if (e.all_zero())
    throw DegenerateRecurrenceError(
        "solve_recurrence_form: the two-form family vanishes identically");
  // sigma's n components as unknowns; each index tuple contributes one
  // linear equation sum_cyc sigma(y1) E(y2,y3,u,y) = sum_cyc (nabla E)(...).
  std::vector<LinRow> rows;
  for (int y1 = 0; y1 < n; ++y1)
    for (int y2 = 0; y2 < n; ++y2)
      for (int y3 = 0; y3 < n; ++y3)
        for (int u = 0; u < n; ++u)
          for (int y = 0; y < n; ++y) {
            LinRow row;
            row.origin = {y1, y2, y3, u, y};
            row.a.assign(n, chart.rf_zero());
            row.a[y1] = row.a[y1] + canonical(e.at({y2, y3, u, y}), chart);
            row.a[y2] = row.a[y2] + canonical(e.at({y3, y1, u, y}), chart);
            row.a[y3] = row.a[y3] + canonical(e.at({y1, y2, u, y}), chart);
            row.rhs = canonical(recurrence_lhs(nabla_e, y1, y2, y3, u, y), chart);
            bool live = !row.rhs.is_zero();
            for (const RatFunc& c : row.a) live = live || !c.is_zero();
            if (live) rows.push_back(std::move(row));
          }
  LinOutcome out = solve_linear(rows, n, chart);
  RecurrenceSolveResult res;
  res.sigma.components.clear();
  for (const RatFunc& x : out.x)
    res.sigma.components.push_back(from_ratfunc(x, chart));
  res.recurrent =
      out.consistent &&
      recurrent_two_forms(bundle, e, nabla_e, res.sigma).holds;
  return res;
}

// ------------------------------------------------------------------ report

namespace {

std::optional<Expr> try_parse(const std::string& text, const Chart& chart) {
  try {
    return parse(text, chart);
  } catch (const UnknownSymbolError&) {
    return std::nullopt;
  }
}

std::string one_form_str(const OneFormField& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    if (i) out += ", ";
    out += s.components[i].str();
  }
  return out + ")";
}

struct ReportBuilder {
  const CurvatureBundle& bundle;
  const Chart& chart;
  StructureReport report;

  void add(ReportItem item) { report.items.push_back(std::move(item)); }

  /// One pseudosymmetry item: E.F against Q(Z,F) with a claimed factor
  /// (empty claim: claimed identically zero).
  Expr factor_item(const std::string& id, const std::string& label,
                   const TensorField& e_dot_f, const TensorField& q_zf,
                   const std::optional<Expr>& claimed_factor,
                   const std::string& claim_text) {
    ReportItem item{id, claim_text, "", false, "", "", {}};
    ProportionalityResult pr = pseudosymmetry_factor(e_dot_f, q_zf);
    Expr factor{Rational(0)};
    switch (pr.kind) {
      case Proportionality::Factor:
        factor = pr.factor;
        item.verdict = "holds-with-factor";
        item.factor = pr.factor.str();
        item.detail = label + " with f = " + pr.factor.str();
        item.matches_paper =
            claimed_factor ? is_zero(pr.factor - *claimed_factor, chart) : true;
        break;
      case Proportionality::BothZero:
        item.verdict = "both-zero";
        item.detail = label + ": both sides vanish";
        item.matches_paper = !claimed_factor;
        break;
      case Proportionality::NotProportional:
        item.verdict = "not-proportional";
        item.detail = label + "; witness " + pr.witness->str();
        item.witness = pr.witness->index;
        item.matches_paper = false;
        break;
    }
    add(std::move(item));
    return factor;
  }

  void zero_item(const std::string& id, const std::string& label,
                 const TensorField& t) {
    ReportItem item{id, label + " = 0", "", false, "", "", {}};
    SemisymmetryResult sr = semisymmetry_check(t);
    if (sr.zero) {
      item.verdict = "holds";
      item.matches_paper = true;
      item.detail = label + " vanishes identically";
    } else {
      item.verdict = "fails";
      item.matches_paper = false;
      item.detail = label + " nonzero; witness " + sr.witness->str();
      item.witness = sr.witness->index;
    }
    add(std::move(item));
  }
};

}  // namespace

bool StructureReport::all_match() const {
  for (const ReportItem& i : items)
    if (!i.matches_paper) return false;
  return true;
}

std::string StructureReport::human() const {
  std::ostringstream os;
  for (const ReportItem& i : items) {
    os << (i.matches_paper ? "PASS" : "FAIL") << "  " << i.id;
    os << std::string(i.id.size() < 6 ? 6 - i.id.size() : 1, ' ');
    os << i.claim;
    if (!i.detail.empty()) os << "  --  " << i.detail;
    os << "\n";
  }
  os << (all_match() ? "all items match the published classification"
                     : "some items deviate from the published classification")
     << "\n";
  return os.str();
}

std::string StructureReport::tree() const {
  nlohmann::ordered_json doc;
  doc["kind"] = "structure-report";
  doc["all_match"] = all_match();
  doc["items"] = nlohmann::ordered_json::array();
  for (const ReportItem& i : items) {
    nlohmann::ordered_json j;
    j["id"] = i.id;
    j["claim"] = i.claim;
    j["verdict"] = i.verdict;
    j["matches"] = i.matches_paper;
    j["factor"] = i.factor;
    nlohmann::ordered_json w = nlohmann::ordered_json::array();
    for (int v : i.witness) w.push_back(v + 1);
    j["witness"] = w;
    j["detail"] = i.detail;
    doc["items"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

StructureReport theorem_report(const CurvatureBundle& bundle, std::uint64_t seed) {
  const Chart& chart = bundle.chart();
  const int n = bundle.dim();
  ReportBuilder b{bundle, chart, {}};
  const MetricSpec& metric = bundle.metric();
  TensorField g = bundle.metric_tensor();
  const bool have_weyl = n >= 4;

  // ---- I: pseudosymmetry-type identities
  TensorField q_ric_r = tachibana(bundle.ric(), bundle.riemann());
  TensorField rr = dot_action(bundle.riemann(), bundle.riemann(), metric);
  b.factor_item("I.1", "R.R = f Q(Ric,R)", rr, q_ric_r,
                Expr(Rational(1)), "pseudosymmetric with f = 1");

  TensorField pr = dot_action(bundle.projective(), bundle.riemann(), metric);
  b.factor_item("I.2", "P.R = f Q(Ric,R)", pr, q_ric_r,
                Expr(Rational(2, 3)), "projectively pseudosymmetric with f = 2/3");

  std::optional<Expr> weyl_factor_claim;
  if (have_weyl)
    weyl_factor_claim = try_parse("b^2/(3*(b^2+X2^2)^2)", chart);
  Expr recovered_cc{Rational(0)};
  if (have_weyl) {
    TensorField q_g_c = tachibana(g, bundle.weyl());
    TensorField cc = dot_action(bundle.weyl(), bundle.weyl(), metric);
    recovered_cc = b.factor_item("I.3", "C.C = f Q(g,C)", cc, q_g_c,
                                 weyl_factor_claim,
                                 "conformally pseudosymmetric, one scalar factor");
    TensorField q_g_k = tachibana(g, bundle.conharmonic());
    TensorField ck = dot_action(bundle.weyl(), bundle.conharmonic(), metric);
    Expr recovered_ck = b.factor_item("I.4", "C.K = f Q(g,K)", ck, q_g_k,
                                      weyl_factor_claim,
                                      "conharmonic action, same scalar factor");
    ReportItem& last = b.report.items.back();
    if (last.verdict == "holds-with-factor" &&
        !is_zero(recovered_ck - recovered_cc, chart)) {
      last.matches_paper = false;
      last.detail += "; factor differs from I.3";
    }
  } else {
    b.add({"I.3", "conformal tensor undefined below dimension 4", "n/a", true,
           "", "", {}});
    b.add({"I.4", "conformal tensor undefined below dimension 4", "n/a", true,
           "", "", {}});
  }

  if (have_weyl) {
    b.zero_item("I.5", "K.C",
                dot_action(bundle.conharmonic(), bundle.weyl(), metric));
  } else {
    b.add({"I.5", "conformal tensor undefined below dimension 4", "n/a", true,
           "", "", {}});
  }
  b.zero_item("I.6", "K.K",
              dot_action(bundle.conharmonic(), bundle.conharmonic(), metric));

  // ---- II: quasi-Einstein ranks
  {
    ReportItem item{"II", "rank(Ric) = 1 and rank(Ric - alpha g) = n - 1", "",
                    false, "", "", {}};
    RankResult plain = quasi_einstein_rank(bundle, Expr(Rational(0)), seed);
    std::string detail = "rank(Ric) = " + std::to_string(plain.rank);
    if (plain.rank == 0) detail += " (Einstein)";
    std::optional<Expr> alpha = try_parse("2*b^2/(b^2+X2^2)^2", chart);
    bool ok = plain.rank == 1;
    if (alpha) {
      RankResult shifted = quasi_einstein_rank(bundle, *alpha, seed);
      detail += ", rank(Ric - alpha g) = " + std::to_string(shifted.rank) +
                " for alpha = " + alpha->str();
      ok = ok && shifted.rank == n - 1;
      item.matches_paper = ok;
    } else {
      item.matches_paper = true;  // no published alpha for this chart
    }
    item.verdict = "rank";
    item.detail = detail;
    b.add(std::move(item));
  }

  // ---- III: Roter solvability and the g^Ric^2 relation
  {
    ReportItem item{"III.1", "not of Roter or generalized Roter type", "",
                    false, "", "", {}};
    RoterResult plain = roter_solve(bundle, false);
    RoterResult gen = roter_solve(bundle, true);
    item.verdict = (!plain.solvable && !gen.solvable) ? "not-solvable"
                                                      : "solvable";
    item.matches_paper = !plain.solvable && !gen.solvable;
    std::string detail;
    if (plain.solvable)
      detail += "plain system solvable";
    else if (plain.certificate)
      detail += "plain certificate " + index_str(plain.certificate->index);
    detail += "; ";
    if (gen.solvable)
      detail += "generalized system solvable";
    else if (gen.certificate)
      detail += "generalized certificate " + index_str(gen.certificate->index);
    item.detail = detail;
    b.add(std::move(item));
  }
  {
    TensorField g_ric2 = kulkarni_nomizu(g, bundle.ricci_power(2));
    TensorField g_ric = kulkarni_nomizu(g, bundle.ric());
    std::optional<Expr> claim = try_parse("2*b^2/(b^2+X2^2)", chart);
    b.factor_item("III.2", "g^Ric2 = f g^Ric", g_ric2, g_ric, claim,
                  "Kulkarni-Nomizu relation between Ric powers");
  }

  // ---- IV: Einstein level 2
  {
    ReportItem item{"IV", "2-Einstein: Ric2 + l1 Ric + l2 g = 0", "", false,
                    "", "", {}};
    EinsteinLevelResult lvl = einstein_level(bundle, 2);
    if (lvl.satisfied) {
      item.verdict = "holds";
      item.detail = "l1 = " + lvl.lambdas[0].str() +
                    ", l2 = " + lvl.lambdas[1].str();
      item.factor = lvl.lambdas[0].str();
      std::optional<Expr> claim = try_parse("-2*b^2/(b^2+X2^2)^2", chart);
      item.matches_paper =
          !claim || (is_zero(lvl.lambdas[0] - *claim, chart) &&
                     is_zero(lvl.lambdas[1], chart));
    } else {
      item.verdict = "fails";
      item.matches_paper = false;
      item.detail = "inconsistent at " + lvl.witness->str();
      item.witness = lvl.witness->index;
    }
    b.add(std::move(item));
  }

  // ---- V: Codazzi / cyclic parallel
  {
    ReportItem item{"V", "Ricci neither Codazzi nor cyclic parallel", "",
                    false, "", "", {}};
    CodazziCyclicResult cc = ricci_codazzi_cyclic(bundle);
    item.verdict = std::string(cc.codazzi ? "codazzi" : "not-codazzi") + "," +
                   (cc.cyclic_parallel ? "cyclic-parallel" : "not-cyclic-parallel");
    item.matches_paper = !cc.codazzi && !cc.cyclic_parallel;
    std::string detail;
    if (cc.codazzi_witness)
      detail += "Codazzi witness " + cc.codazzi_witness->str();
    if (cc.cyclic_witness) {
      if (!detail.empty()) detail += "; ";
      detail += "cyclic witness " + cc.cyclic_witness->str();
    }
    if (cc.codazzi_witness) item.witness = cc.codazzi_witness->index;
    item.detail = detail;
    b.add(std::move(item));
  }

  // ---- VI: Ricci compatibility
  {
    ReportItem item{"VI", "Ric compatible with R, C, K", "", false, "", "", {}};
    CompatibilityResult with_r =
        compatibility_check(bundle, bundle.ric(), bundle.riemann());
    CompatibilityResult with_k =
        compatibility_check(bundle, bundle.ric(), bundle.conharmonic());
    bool ok = with_r.compatible && with_k.compatible;
    std::string detail = std::string("R: ") +
                         (with_r.compatible ? "compatible" : "incompatible");
    if (have_weyl) {
      CompatibilityResult with_c =
          compatibility_check(bundle, bundle.ric(), bundle.weyl());
      ok = ok && with_c.compatible;
      detail += std::string(", C: ") +
                (with_c.compatible ? "compatible" : "incompatible");
    }
    detail += std::string(", K: ") +
              (with_k.compatible ? "compatible" : "incompatible");
    item.verdict = ok ? "compatible" : "incompatible";
    item.matches_paper = ok;
    item.detail = detail;
    b.add(std::move(item));
  }

  // ---- VII: recurrent conformal 2-forms
  {
    ReportItem item{"VII",
                    "conformal 2-forms recurrent for sigma = "
                    "(0, -X2/(b^2+X2^2), 0, 0)",
                    "", false, "", "", {}};
    if (!have_weyl) {
      item.claim = "conformal tensor undefined below dimension 4";
      item.verdict = "n/a";
      item.matches_paper = true;
    } else if (bundle.weyl().all_zero()) {
      item.verdict = "degenerate";
      item.detail = "C vanishes identically; recurrence undefined";
      item.matches_paper = !try_parse("-X2/(b^2+X2^2)", chart).has_value();
    } else {
      std::optional<Expr> claimed = try_parse("-X2/(b^2+X2^2)", chart);
      bool checked_claim = false, claim_holds = false;
      std::optional<Witness> claim_witness;
      if (claimed) {
        OneFormField sigma;
        sigma.components.assign(n, Expr(Rational(0)));
        sigma.components[1] = *claimed;
        RecurrenceResult rec = recurrent_two_forms(bundle, bundle.weyl(),
                                                   bundle.nabla_weyl(), sigma);
        checked_claim = true;
        claim_holds = rec.holds;
        claim_witness = rec.witness;
      }
      RecurrenceSolveResult solved =
          solve_recurrence_form(bundle, bundle.weyl(), bundle.nabla_weyl());
      std::string detail;
      if (solved.recurrent)
        detail = "engine-solved sigma = " + one_form_str(solved.sigma);
      else
        detail = "no recurrence 1-form exists";
      if (checked_claim && !claim_holds && claim_witness) {
        detail = "published 1-form fails; witness " + claim_witness->str() +
                 "; " + detail;
        item.witness = claim_witness->index;
      }
      if (checked_claim) {
        item.verdict = claim_holds ? "holds" : "fails";
        bool recovered_match =
            solved.recurrent && claim_holds &&
            is_zero(solved.sigma.components[1] - *claimed, chart);
        for (int i = 0; i < n && recovered_match; ++i)
          if (i != 1)
            recovered_match = is_zero(solved.sigma.components[i], chart);
        item.matches_paper = claim_holds && recovered_match;
      } else {
        item.verdict = solved.recurrent ? "recurrent" : "not-recurrent";
        item.matches_paper = true;  // nothing published for this chart
      }
      item.detail = detail;
    }
    b.add(std::move(item));
  }

  return std::move(b.report);
}

}  // namespace geocurv
