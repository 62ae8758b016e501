#include "prp/json_io.hpp"

#include <fstream>

namespace prp {

namespace {

json set_to_json(Mask s) {
  json arr = json::array();
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1u) arr.push_back(i + 1);
  return arr;
}

Mask set_from_json(const json& arr, int n) {
  if (!arr.is_array() || arr.empty())
    throw std::invalid_argument("atom set must be a nonempty array of sites");
  Mask m = 0;
  int prev = 0;
  for (const auto& v : arr) {
    int site = v.get<int>();
    if (site <= prev) throw std::invalid_argument("atom sites must be strictly increasing");
    if (site > n) throw std::invalid_argument("atom site exceeds the ground set");
    m |= Mask{1} << (site - 1);
    prev = site;
  }
  return m;
}

template <class M>
json measure_to_json(const M& nu) {
  json j;
  j["n"] = nu.n();
  json atoms = json::array();
  for (const auto& [s, m] : nu.atoms()) atoms.push_back({{"set", set_to_json(s)}, {"mass", m}});
  j["atoms"] = std::move(atoms);
  return j;
}

}  // namespace

json to_json(const SubsetMeasure& nu) { return measure_to_json(nu); }
json to_json(const SignedSubsetMeasure& nu) { return measure_to_json(nu); }

SubsetMeasure subset_measure_from_json(const json& j) {
  SubsetMeasure nu(j.at("n").get<int>());
  for (const auto& atom : j.at("atoms"))
    nu.add_mass(set_from_json(atom.at("set"), nu.n()), atom.at("mass").get<double>());
  return nu;
}

SignedSubsetMeasure signed_measure_from_json(const json& j) {
  SignedSubsetMeasure nu(j.at("n").get<int>());
  for (const auto& atom : j.at("atoms")) {
    Mask s = set_from_json(atom.at("set"), nu.n());
    nu.set_mass(s, nu.mass(s) + atom.at("mass").get<double>());
  }
  return nu;
}

json to_json(const BinaryDistribution& d) {
  return json{{"n", d.n()}, {"probs", d.values()}};
}

BinaryDistribution distribution_from_json(const json& j) {
  return BinaryDistribution(j.at("n").get<int>(), j.at("probs").get<std::vector<double>>(), 1e-9);
}

json to_json(const SymmetricZeroPattern& z) { return json{{"n", z.n()}, {"z", z.values()}}; }

SymmetricZeroPattern symmetric_pattern_from_json(const json& j) {
  return SymmetricZeroPattern(j.at("n").get<int>(), j.at("z").get<std::vector<double>>());
}

GapDistribution gaps_from_json(const json& j) {
  return GapDistribution(j.at("b").get<std::vector<double>>(), 1e-9);
}

namespace {

json sigma_density_to_json(const SigmaDensity& d) {
  json j;
  switch (d.kind) {
    case SigmaKind::none: return nullptr;
    case SigmaKind::lebesgue: j["kind"] = "lebesgue"; break;
    case SigmaKind::ex_uniform: j["kind"] = "ex49"; break;
    case SigmaKind::beta:
      j["kind"] = "beta";
      j["params"] = {{"a", d.a}, {"b", d.b}};
      break;
  }
  return j;
}

SigmaDensity sigma_density_from_json(const json& j) {
  SigmaDensity d;
  if (j.is_null()) return d;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "lebesgue") {
    d.kind = SigmaKind::lebesgue;
  } else if (kind == "ex49") {
    d.kind = SigmaKind::ex_uniform;
  } else if (kind == "beta") {
    d.kind = SigmaKind::beta;
    d.a = j.at("params").at("a").get<double>();
    d.b = j.at("params").at("b").get<double>();
  } else {
    throw std::invalid_argument("unknown density id '" + kind +
                                "' (built-ins: lebesgue, ex49, beta)");
  }
  return d;
}

json levy_density_to_json(const LevyDensity& d) {
  json j;
  switch (d.kind) {
    case LevyKind::none: return nullptr;
    case LevyKind::exp_decay: j["kind"] = "exp-decay"; break;
    case LevyKind::exp_over_s: j["kind"] = "exp-over-s"; break;
    case LevyKind::beta_levy:
      j["kind"] = "beta-levy";
      j["params"] = {{"a", d.a}, {"b", d.b}};
      break;
  }
  return j;
}

LevyDensity levy_density_from_json(const json& j) {
  LevyDensity d;
  if (j.is_null()) return d;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "exp-decay") {
    d.kind = LevyKind::exp_decay;
  } else if (kind == "exp-over-s") {
    d.kind = LevyKind::exp_over_s;
  } else if (kind == "beta-levy") {
    d.kind = LevyKind::beta_levy;
    d.a = j.at("params").at("a").get<double>();
    d.b = j.at("params").at("b").get<double>();
  } else {
    throw std::invalid_argument("unknown levy density id '" + kind + "'");
  }
  return d;
}

}  // namespace

json to_json(const ExchangeableNu& en) {
  json atoms = json::array();
  for (const auto& [x, m] : en.atoms) atoms.push_back({{"x", x}, {"mass", m}});
  return json{{"c", en.c},
              {"fullset", en.full_set},
              {"atoms", std::move(atoms)},
              {"density", sigma_density_to_json(en.density)}};
}

ExchangeableNu exchangeable_from_json(const json& j) {
  ExchangeableNu en;
  en.c = j.value("c", 0.0);
  en.full_set = j.value("fullset", 0.0);
  if (j.contains("atoms"))
    for (const auto& a : j.at("atoms"))
      en.atoms.emplace_back(a.at("x").get<double>(), a.at("mass").get<double>());
  if (j.contains("density")) en.density = sigma_density_from_json(j.at("density"));
  en.validate();
  return en;
}

json to_json(const LevyTriple& lt) {
  json atoms = json::array();
  for (const auto& [s, m] : lt.atoms) atoms.push_back({{"s", s}, {"mass", m}});
  return json{{"gamma", lt.gamma},
              {"mass_at_infinity", lt.mass_at_infinity},
              {"atoms", std::move(atoms)},
              {"density", levy_density_to_json(lt.density)}};
}

LevyTriple levy_from_json(const json& j) {
  LevyTriple lt;
  lt.gamma = j.value("gamma", 0.0);
  lt.mass_at_infinity = j.value("mass_at_infinity", 0.0);
  if (j.contains("atoms"))
    for (const auto& a : j.at("atoms"))
      lt.atoms.emplace_back(a.at("s").get<double>(), a.at("mass").get<double>());
  if (j.contains("density")) lt.density = levy_density_from_json(j.at("density"));
  lt.validate();
  return lt;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace prp
