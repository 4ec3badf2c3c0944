#include "geocurv/manifest.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace geocurv {

ManifestError::ManifestError(const std::string& msg, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                  : msg),
      line(line) {}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

struct RawLine {
  int number;
  std::string key, value;
};

}  // namespace

Model Model::from_manifest_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<RawLine> raw;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ManifestError("expected `key = value`", number);
    raw.push_back({number, trim(t.substr(0, eq)), trim(t.substr(eq + 1))});
  }

  int dim = 0, dim_line = 0;
  std::vector<std::string> coords, params;
  for (const RawLine& r : raw) {
    if (r.key == "dim") {
      try {
        dim = std::stoi(r.value);
      } catch (const std::exception&) {
        throw ManifestError("dim must be an integer", r.number);
      }
      dim_line = r.number;
    } else if (r.key == "coords") {
      coords = split_commas(r.value);
    } else if (r.key == "params") {
      params = r.value.empty() ? std::vector<std::string>{} : split_commas(r.value);
    }
  }
  if (dim == 0) throw ManifestError("missing `dim`", 0);
  if (dim < 2) throw ManifestError("dim must be >= 2", dim_line);
  if (coords.empty()) throw ManifestError("missing `coords`", 0);
  if (static_cast<int>(coords.size()) != dim)
    throw ManifestError("coords lists " + std::to_string(coords.size()) +
                            " names but dim = " + std::to_string(dim),
                        0);

  Model m;
  try {
    m.chart_ = std::make_unique<Chart>(dim, coords, params);
  } catch (const ChartError& e) {
    throw ManifestError(e.what(), 0);
  }
  const Chart& chart = *m.chart_;

  std::vector<std::vector<Expr>> g(dim, std::vector<Expr>(dim, Expr(Rational(0))));
  std::string connection_kind = "levi-civita";
  int connection_line = 0;
  std::vector<Expr> p;
  bool have_p = false;

  auto parse_expr = [&chart](const std::string& text_, int ln) {
    try {
      return parse(text_, chart);
    } catch (const SyntaxError& e) {
      throw ManifestError(e.what(), ln);
    } catch (const UnknownSymbolError& e) {
      throw ManifestError(e.what(), ln);
    }
  };

  for (const RawLine& r : raw) {
    if (r.key == "dim" || r.key == "coords" || r.key == "params") continue;
    if (r.key == "connection") {
      connection_kind = r.value;
      connection_line = r.number;
      if (connection_kind != "ssnm" && connection_kind != "levi-civita")
        throw ManifestError("connection must be `ssnm` or `levi-civita`",
                            r.number);
    } else if (r.key == "P") {
      std::vector<std::string> parts = split_commas(r.value);
      if (static_cast<int>(parts.size()) != dim)
        throw ManifestError("P needs " + std::to_string(dim) + " components",
                            r.number);
      p.clear();
      for (const std::string& s : parts) p.push_back(parse_expr(s, r.number));
      have_p = true;
    } else if (r.key.size() > 1 && r.key.compare(0, 2, "g[") == 0) {
      int i = 0, j = 0;
      if (std::sscanf(r.key.c_str(), "g[%d][%d]", &i, &j) != 2)
        throw ManifestError("malformed metric key `" + r.key + "`", r.number);
      if (i < 1 || i > dim || j < 1 || j > dim)
        throw ManifestError("metric index out of range in `" + r.key + "`",
                            r.number);
      Expr e = parse_expr(r.value, r.number);
      g[i - 1][j - 1] = e;
      g[j - 1][i - 1] = e;
    } else {
      throw ManifestError("unknown key `" + r.key + "`", r.number);
    }
  }

  if (connection_kind == "ssnm" && !have_p)
    throw ManifestError("connection `ssnm` requires a `P` line",
                        connection_line);
  if (connection_kind == "levi-civita" && have_p)
    throw ManifestError("`P` is only meaningful with connection `ssnm`", 0);

  try {
    m.metric_ = std::make_unique<MetricSpec>(chart, std::move(g));
    if (connection_kind == "ssnm")
      m.connection_ = std::make_unique<ConnectionSpec>(
          ssnm_christoffels(chart, *m.metric_, p));
    else
      m.connection_ = std::make_unique<ConnectionSpec>(
          levi_civita_christoffels(chart, *m.metric_));
  } catch (const DegenerateMetricError& e) {
    throw ManifestError(e.what(), 0);
  }
  return m;
}

Model Model::from_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot open manifest `" + path + "`", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_manifest_text(ss.str());
}

const char* Model::morris_thorne_manifest() {
  return R"(dim = 4
coords = X1, X2, X3, X4
params = a, b, c
g[1][1] = -c^2
g[2][2] = 1
g[3][3] = b^2 + X2^2
g[4][4] = (b^2 + X2^2) * sin(X3)^2
connection = ssnm
P = 0, a, 0, 0
)";
}

Model Model::preset(const std::string& name) {
  if (name == "morris-thorne")
    return from_manifest_text(morris_thorne_manifest());
  throw ManifestError("unknown preset `" + name + "`", 0);
}

}  // namespace geocurv
