#include "hyperorbit/io.hpp"

#include <fstream>
#include <sstream>

namespace hyperorbit {

std::string InputError::join(const std::vector<SchemaViolation>& v) {
  std::ostringstream os;
  os << "input rejected (" << v.size() << " violation" << (v.size() == 1 ? "" : "s") << ")";
  for (const auto& x : v) os << "\n  " << x.where << ": " << x.message;
  return os.str();
}

namespace {

using nlohmann::json;

struct Collector {
  std::vector<SchemaViolation> violations;
  void add(const std::string& where, const std::string& msg) { violations.push_back({where, msg}); }
  void finish() {
    if (!violations.empty()) throw InputError(std::move(violations));
  }
};

std::optional<ScalarExpr> parse_lit(const json& j, const std::string& where, Collector& c) {
  if (j.is_number_integer()) return ScalarExpr::from_rational(Rational(j.get<long long>()));
  if (!j.is_string()) {
    c.add(where, "expected a scalar literal string");
    return std::nullopt;
  }
  try {
    return ScalarExpr::parse(j.get<std::string>());
  } catch (const ScalarParseError& e) {
    c.add(where, e.what());
    return std::nullopt;
  }
}

std::optional<std::vector<std::vector<ScalarExpr>>> parse_matrix(const json& j, int rows, int cols,
                                                                 const std::string& where,
                                                                 Collector& c) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    c.add(where, "expected " + std::to_string(rows) + " rows");
    return std::nullopt;
  }
  std::vector<std::vector<ScalarExpr>> m(rows);
  bool ok = true;
  for (int i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      c.add(where + "[" + std::to_string(i) + "]", "expected " + std::to_string(cols) + " entries");
      ok = false;
      continue;
    }
    for (int k = 0; k < cols; ++k) {
      auto e = parse_lit(row[k], where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]", c);
      if (e)
        m[i].push_back(*e);
      else
        ok = false;
    }
  }
  if (!ok) return std::nullopt;
  return m;
}

std::optional<std::vector<ScalarExpr>> parse_vector(const json& j, int len, const std::string& where,
                                                    Collector& c) {
  if (!j.is_array() || static_cast<int>(j.size()) != len) {
    c.add(where, "expected " + std::to_string(len) + " entries");
    return std::nullopt;
  }
  std::vector<ScalarExpr> v;
  bool ok = true;
  for (int k = 0; k < len; ++k) {
    auto e = parse_lit(j[k], where + "[" + std::to_string(k) + "]", c);
    if (e)
      v.push_back(*e);
    else
      ok = false;
  }
  if (!ok) return std::nullopt;
  return v;
}

std::optional<AffineMapSource> parse_map(const json& j, int n, const std::string& where,
                                         Collector& c) {
  if (!j.is_object() || !j.contains("A") || !j.contains("a")) {
    c.add(where, "expected an object with \"A\" and \"a\"");
    return std::nullopt;
  }
  auto lin = parse_matrix(j["A"], n, n, where + ".A", c);
  auto tr = parse_vector(j["a"], n, where + ".a", c);
  if (!lin || !tr) return std::nullopt;
  return AffineMapSource{std::move(*lin), std::move(*tr)};
}

Matrix<ExactComplex> to_exact_matrix(const std::vector<std::vector<ScalarExpr>>& m) {
  Matrix<ExactComplex> out(m.size(), m.empty() ? 0 : m[0].size(), ExactComplex(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out(i, j) = m[i][j].to_exact();
  return out;
}

}  // namespace

PresentationSource load_presentation(const nlohmann::json& j) {
  Collector c;
  PresentationSource src;
  if (!j.is_object()) {
    c.add("$", "top level must be an object");
    c.finish();
  }
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 1)
    c.add("n", "required positive integer");
  else
    src.n = j["n"].get<int>();

  if (j.contains("constants")) {
    if (!j["constants"].is_array()) {
      c.add("constants", "expected an array of integers");
    } else {
      std::vector<long long> ds;
      for (size_t k = 0; k < j["constants"].size(); ++k) {
        const auto& d = j["constants"][k];
        if (!d.is_number_integer())
          c.add("constants[" + std::to_string(k) + "]", "expected an integer");
        else
          ds.push_back(d.get<long long>());
      }
      try {
        src.constants = SurdBasis(ds);
      } catch (const std::invalid_argument& e) {
        c.add("constants", e.what());
      }
    }
  }

  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty()) {
    c.add("generators", "required non-empty array");
  } else if (src.n > 0) {
    for (size_t k = 0; k < j["generators"].size(); ++k) {
      auto m = parse_map(j["generators"][k], src.n, "generators[" + std::to_string(k) + "]", c);
      if (m) src.generators.push_back(std::move(*m));
    }
  }

  if (j.contains("log_generators") && src.n > 0) {
    if (!j["log_generators"].is_array() ||
        j["log_generators"].size() != j["generators"].size()) {
      c.add("log_generators", "must match the generator count");
    } else {
      std::vector<AffineMapSource> logs;
      for (size_t k = 0; k < j["log_generators"].size(); ++k) {
        auto m =
            parse_map(j["log_generators"][k], src.n, "log_generators[" + std::to_string(k) + "]", c);
        if (m) logs.push_back(std::move(*m));
      }
      if (logs.size() == j["log_generators"].size()) src.log_generators = std::move(logs);
    }
  }

  if (j.contains("P") && src.n > 0) {
    auto p = parse_matrix(j["P"], src.n + 1, src.n + 1, "P", c);
    if (p) src.hint_P = std::move(*p);
  }

  if (j.contains("eta")) {
    if (!j["eta"].is_array()) {
      c.add("eta", "expected an array of positive integers");
    } else {
      std::vector<int> eta;
      int sum = 0;
      bool ok = true;
      for (size_t k = 0; k < j["eta"].size(); ++k) {
        const auto& e = j["eta"][k];
        if (!e.is_number_integer() || e.get<int>() < 1) {
          c.add("eta[" + std::to_string(k) + "]", "expected a positive integer");
          ok = false;
        } else {
          eta.push_back(e.get<int>());
          sum += e.get<int>();
        }
      }
      if (ok && src.n > 0 && sum != src.n + 1)
        c.add("eta", "block sizes must sum to n+1 = " + std::to_string(src.n + 1));
      else if (ok)
        src.hint_eta = std::move(eta);
    }
  }

  // every radicand used must be declared
  std::set<long long> used;
  auto collect_map = [&](const AffineMapSource& m) {
    for (const auto& row : m.linear)
      for (const auto& e : row) e.collect_radicands(used);
    for (const auto& e : m.translation) e.collect_radicands(used);
  };
  for (const auto& g : src.generators) collect_map(g);
  if (src.log_generators)
    for (const auto& g : *src.log_generators) collect_map(g);
  if (src.hint_P)
    for (const auto& row : *src.hint_P)
      for (const auto& e : row) e.collect_radicands(used);
  for (long long d : used)
    if (!src.constants.contains(d))
      c.add("constants", "sqrt(" + std::to_string(d) + ") used but " + std::to_string(d) +
                             " is not declared");

  c.finish();
  return src;
}

PresentationSource load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError({{path, "cannot open file"}});
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError({{path, e.what()}});
  }
  return load_presentation(j);
}

namespace {

json map_to_json(const AffineMapSource& m) {
  json a = json::array(), t = json::array();
  for (const auto& row : m.linear) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    a.push_back(r);
  }
  for (const auto& e : m.translation) t.push_back(e.to_string());
  return json{{"A", a}, {"a", t}};
}

}  // namespace

nlohmann::json presentation_to_json(const PresentationSource& src) {
  json j;
  j["n"] = src.n;
  json cs = json::array();
  for (long long d : src.constants.radicands()) cs.push_back(d);
  j["constants"] = cs;
  json gens = json::array();
  for (const auto& g : src.generators) gens.push_back(map_to_json(g));
  j["generators"] = gens;
  if (src.log_generators) {
    json logs = json::array();
    for (const auto& g : *src.log_generators) logs.push_back(map_to_json(g));
    j["log_generators"] = logs;
  }
  if (src.hint_P) {
    json p = json::array();
    for (const auto& row : *src.hint_P) {
      json r = json::array();
      for (const auto& e : row) r.push_back(e.to_string());
      p.push_back(r);
    }
    j["P"] = p;
  }
  if (src.hint_eta) j["eta"] = *src.hint_eta;
  return j;
}

AffinePresentation<BigComplex> PresentationSource::realize_numeric(mpfr_prec_t prec) const {
  AffinePresentation<BigComplex> g;
  g.n = n;
  auto realize_map = [&](const AffineMapSource& m) {
    AffineMap<BigComplex> f{Matrix<BigComplex>(n, n, BigComplex(prec)),
                            std::vector<BigComplex>(n, BigComplex(prec))};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) f.linear(i, j) = m.linear[i][j].to_numeric(prec);
      f.translation[i] = m.translation[i].to_numeric(prec);
    }
    return f;
  };
  for (const auto& m : generators) g.generators.push_back(realize_map(m));
  if (log_generators) {
    std::vector<AffineMap<BigComplex>> logs;
    for (const auto& m : *log_generators) logs.push_back(realize_map(m));
    g.log_generators = std::move(logs);
  }
  if (hint_P) {
    Matrix<BigComplex> p(n + 1, n + 1, BigComplex(prec));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) p(i, j) = (*hint_P)[i][j].to_numeric(prec);
    g.hint_P = std::move(p);
  }
  if (hint_eta) g.hint_eta = BlockStructure(*hint_eta);
  return g;
}

PresentationSource::ExactPieces PresentationSource::realize_exact() const {
  ExactPieces out;
  auto realize_map = [&](const AffineMapSource& m) {
    AffineMap<ExactComplex> f{Matrix<ExactComplex>(n, n, ExactComplex(0)),
                              std::vector<ExactComplex>(n, ExactComplex(0))};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) f.linear(i, j) = m.linear[i][j].to_exact();
      f.translation[i] = m.translation[i].to_exact();
    }
    return f;
  };
  try {
    std::vector<AffineMap<ExactComplex>> gens;
    for (const auto& m : generators) gens.push_back(realize_map(m));
    out.generators = std::move(gens);
  } catch (const NotExactError&) {
  }
  if (log_generators) {
    try {
      std::vector<AffineMap<ExactComplex>> logs;
      for (const auto& m : *log_generators) logs.push_back(realize_map(m));
      out.log_generators = std::move(logs);
    } catch (const NotExactError&) {
    }
  }
  if (hint_P) {
    try {
      Matrix<ExactComplex> p(n + 1, n + 1, ExactComplex(0));
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) p(i, j) = (*hint_P)[i][j].to_exact();
      out.P = std::move(p);
    } catch (const NotExactError&) {
    }
  }
  if (hint_eta) out.eta = BlockStructure(*hint_eta);
  return out;
}

PresentationSource builtin_example() {
  const char* text = R"JSON({
  "n": 2,
  "constants": [2, 3, 5, 7],
  "generators": [
    {"A": [["1", "0"], ["0", "1"]], "a": ["1 + i", "0"]},
    {"A": [["1", "0"], ["0", "exp(-2 + i)"]], "a": ["0", "0"]},
    {"A": [["1", "0"], ["0", "exp(-sqrt(2)/pi + i*(sqrt(2)/(2*pi) - sqrt(7)/2))"]],
     "a": ["-sqrt(3)/(2*pi) + i*(sqrt(5)/2 - sqrt(3)/(2*pi))", "0"]},
    {"A": [["1", "0"], ["0", "1"]], "a": ["2*i*pi", "0"]}
  ],
  "log_generators": [
    {"A": [["0", "0"], ["0", "0"]], "a": ["1 + i", "0"]},
    {"A": [["0", "0"], ["0", "-2 + i"]], "a": ["0", "0"]},
    {"A": [["0", "0"], ["0", "-sqrt(2)/pi + i*(sqrt(2)/(2*pi) - sqrt(7)/2)"]],
     "a": ["-sqrt(3)/(2*pi) + i*(sqrt(5)/2 - sqrt(3)/(2*pi))", "0"]},
    {"A": [["0", "0"], ["0", "0"]], "a": ["2*i*pi", "0"]}
  ],
  "P": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
  "eta": [2, 1]
})JSON";
  return load_presentation(nlohmann::json::parse(text));
}

nlohmann::json exact_real_to_json(const ExactReal& x) {
  auto poly = [](const ExactPoly& p) {
    json terms = json::array();
    for (int j = 0; j <= p.degree(); ++j) {
      const MultiquadElem c = p.coeff(j);
      for (const auto& [d, q] : c.coords())
        terms.push_back(json::array({j, d, rational_to_string(q)}));
    }
    return terms;
  };
  return json{{"num", poly(x.num())}, {"den", poly(x.den())}};
}

ExactReal exact_real_from_json(const nlohmann::json& j) {
  auto poly = [](const json& terms) {
    std::vector<MultiquadElem> coeffs;
    for (const auto& t : terms) {
      int jp = t[0].get<int>();
      long long d = t[1].get<long long>();
      Rational q = parse_rational(t[2].get<std::string>());
      if (static_cast<int>(coeffs.size()) <= jp) coeffs.resize(jp + 1);
      coeffs[jp] += MultiquadElem::surd(d, q);
    }
    return ExactPoly(std::move(coeffs));
  };
  ExactPoly num = poly(j.at("num"));
  ExactPoly den = poly(j.at("den"));
  if (den.is_zero()) den = ExactPoly::constant(MultiquadElem(1));
  return ExactReal(std::move(num), std::move(den));
}

std::string status_name(DensityStatus s) {
  switch (s) {
    case DensityStatus::Dense:
      return "DENSE";
    case DensityStatus::NotDense:
      return "NOT_DENSE";
    default:
      return "INCONCLUSIVE";
  }
}

std::string certificate_name(Certificate::Type t) {
  switch (t) {
    case Certificate::ExactRankProof:
      return "ExactRankProof";
    case Certificate::IntegerRelation:
      return "IntegerRelation";
    case Certificate::CountShortfall:
      return "CountShortfall";
    case Certificate::LatticeConfidence:
      return "LatticeConfidence";
    default:
      return "NumericRankDeficiency";
  }
}

nlohmann::json verdict_to_json(const DensityVerdict& v) {
  json data;
  const Certificate& c = v.certificate;
  switch (c.type) {
    case Certificate::ExactRankProof:
      data = {{"rank", c.rank}, {"required", c.required}};
      if (c.mq_rank >= 0) data["rational_constraint_rank"] = c.mq_rank;
      break;
    case Certificate::IntegerRelation: {
      json s = json::array();
      for (const auto& z : c.relation) s.push_back(z.str());
      data = {{"s", s}};
      break;
    }
    case Certificate::CountShortfall:
      data = {{"needed", c.needed}};
      if (c.m >= 0) data["m"] = c.m;
      break;
    case Certificate::LatticeConfidence:
      data = {{"max_relation_norm", c.max_relation_norm}, {"rank", c.rank}};
      break;
    case Certificate::NumericRankDeficiency:
      data = {{"rank", c.rank}, {"required", c.required}};
      break;
  }
  return json{{"status", status_name(v.status)},
              {"certificate", {{"type", certificate_name(c.type)}, {"data", data}}},
              {"backend", v.backend}};
}

}  // namespace hyperorbit
