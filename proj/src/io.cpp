#include "tatek/io.hpp"

#include <set>

namespace tatek {

namespace {

template <class F> auto guarded(const char *what, F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const FormatError &) {
    throw;
  } catch (const json::exception &e) {
    throw FormatError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument &e) {
    throw FormatError(std::string(what) + ": " + e.what());
  } catch (const GroupError &e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

Fraction fraction_from_string(const std::string &s) {
  Rational r = parse_rational(s);
  if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
    throw FormatError("exponent out of range: " + s);
  return Fraction(r.get_num().get_si(), r.get_den().get_si());
}

Fraction fraction_from_json(const json &j) {
  if (j.is_number_integer())
    return Fraction(j.get<std::int64_t>());
  if (j.is_string())
    return fraction_from_string(j.get<std::string>());
  throw FormatError("expected an exact rational (string or integer)");
}

Perm perm_from_json(const json &j) {
  if (!j.is_array())
    throw FormatError("permutation must be an array of 1-based images");
  Perm p;
  for (const auto &v : j)
    p.push_back(v.get<int>() - 1);
  if (!is_permutation(p))
    throw FormatError("malformed permutation");
  return p;
}

json perm_to_json(const Perm &p) {
  json a = json::array();
  for (int v : p)
    a.push_back(v + 1);
  return a;
}

} // namespace

json to_json(const Cyclotomic &c) {
  json terms = json::array();
  for (const auto &[e, r] : c.terms())
    terms.push_back(json::array({e, rational_to_string(r)}));
  return {{"order", c.order()}, {"terms", terms}};
}

Cyclotomic cyclotomic_from_json(const json &j) {
  return guarded("cyclotomic", [&] {
    if (j.is_string())
      return Cyclotomic(parse_rational(j.get<std::string>()));
    if (j.is_number_integer())
      return Cyclotomic(j.get<long>());
    const auto order = j.at("order").get<std::int64_t>();
    if (order < 1)
      throw FormatError("cyclotomic order must be positive");
    std::vector<std::pair<std::int64_t, Rational>> terms;
    for (const auto &t : j.at("terms")) {
      if (!t.is_array() || t.size() != 2)
        throw FormatError("cyclotomic term must be [exponent, \"p/q\"]");
      const json &c = t[1];
      Rational r = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
      terms.emplace_back(t[0].get<std::int64_t>(), r);
    }
    return Cyclotomic::from_terms(order, terms);
  });
}

json to_json(const Series &s) {
  json terms = json::array();
  for (const auto &[e, c] : s.terms())
    terms.push_back({{"num", e.num()}, {"den", e.den()}, {"coeff", to_json(c)}});
  json out = {{"terms", terms}};
  out["truncation"] = s.truncation() ? json(s.truncation()->to_string()) : json(nullptr);
  return out;
}

Series series_from_json(const json &j) {
  return guarded("series", [&] {
    Series s;
    const json &tr = j.contains("truncation") ? j.at("truncation") : json(nullptr);
    std::set<Fraction> seen;
    for (const auto &t : j.at("terms")) {
      const auto den = t.at("den").get<std::int64_t>();
      if (den < 1)
        throw FormatError("exponent denominator must be positive");
      const Fraction e(t.at("num").get<std::int64_t>(), den);
      if (!seen.insert(e).second)
        throw FormatError("duplicate exponent " + e.to_string());
      s += Series::monomial(e, cyclotomic_from_json(t.at("coeff")));
    }
    if (!tr.is_null())
      s = s.truncated(fraction_from_json(tr));
    return s;
  });
}

json to_json(const BivariateSeries &b) {
  json coeffs = json::array();
  for (int n = 0; n <= b.t_order(); ++n)
    coeffs.push_back({{"t", n}, {"series", to_json(b[n])}});
  return {{"t_order", b.t_order()}, {"coefficients", coeffs}};
}

json to_json(const Polynomial &p) {
  json a = json::array();
  for (const auto &c : p)
    a.push_back(rational_to_string(c));
  return {{"coefficients", a}, {"text", polynomial_to_string(p)}};
}

json group_to_json(const FiniteGroup &g) {
  switch (g.kind()) {
  case FiniteGroup::Kind::Permutation: {
    json gens = json::array();
    for (int s : g.generators())
      gens.push_back(perm_to_json(g.permutation(s)));
    json out = {{"degree", g.degree()}, {"generators", gens}};
    if (!g.name().empty())
      out["name"] = g.name();
    return out;
  }
  case FiniteGroup::Kind::Wreath:
    return {{"wreath", {{"base", group_to_json(*g.base())}, {"n", g.degree()}}}};
  case FiniteGroup::Kind::Product:
    return {{"product", json::array({group_to_json(*g.left()), group_to_json(*g.right())})}};
  }
  return nullptr;
}

GroupPtr group_from_json(const json &j, std::size_t cap) {
  return guarded("group", [&]() -> GroupPtr {
    if (j.contains("wreath")) {
      const json &w = j.at("wreath");
      return FiniteGroup::wreath(group_from_json(w.at("base"), cap), w.at("n").get<int>(), cap);
    }
    if (j.contains("product")) {
      const json &p = j.at("product");
      if (!p.is_array() || p.size() != 2)
        throw FormatError("product group needs exactly two factors");
      return FiniteGroup::product(group_from_json(p[0], cap), group_from_json(p[1], cap), cap);
    }
    const int degree = j.at("degree").get<int>();
    std::vector<Perm> gens;
    for (const auto &g : j.value("generators", json::array())) {
      Perm p = perm_from_json(g);
      if (static_cast<int>(p.size()) != degree)
        throw FormatError("generator length does not match degree");
      gens.push_back(p);
    }
    return FiniteGroup::from_generators(degree, gens, cap, j.value("name", std::string()));
  });
}

json element_to_json(const FiniteGroup &g, int e) {
  switch (g.kind()) {
  case FiniteGroup::Kind::Permutation:
    return perm_to_json(g.permutation(e));
  case FiniteGroup::Kind::Wreath: {
    json base = json::array();
    for (int b : g.wreath_base(e))
      base.push_back(element_to_json(*g.base(), b));
    return {{"base", base}, {"perm", perm_to_json(g.wreath_perm(e))}};
  }
  case FiniteGroup::Kind::Product: {
    auto [l, r] = g.product_split(e);
    return {{"left", element_to_json(*g.left(), l)}, {"right", element_to_json(*g.right(), r)}};
  }
  }
  return nullptr;
}

int element_from_json(const FiniteGroup &g, const json &j) {
  return guarded("element", [&] {
    switch (g.kind()) {
    case FiniteGroup::Kind::Permutation: {
      Perm p = perm_from_json(j);
      if (static_cast<int>(p.size()) != g.degree())
        throw FormatError("element has the wrong degree");
      int i = g.index_of(FiniteGroup::Encoding(p.begin(), p.end()));
      if (i < 0)
        throw FormatError("permutation is not an element of the group");
      return i;
    }
    case FiniteGroup::Kind::Wreath: {
      std::vector<int> base;
      for (const auto &b : j.at("base"))
        base.push_back(element_from_json(*g.base(), b));
      return g.wreath_make(base, perm_from_json(j.at("perm")));
    }
    case FiniteGroup::Kind::Product:
      return g.product_make(element_from_json(*g.left(), j.at("left")), element_from_json(*g.right(), j.at("right")));
    }
    return -1;
  });
}

json to_json(const DevotoElement &x) {
  const auto &g = *x.group();
  json entries = json::array();
  const auto &pcs = g.pair_classes().classes;
  for (std::size_t i = 0; i < pcs.size(); ++i)
    entries.push_back({{"g", element_to_json(g, pcs[i].g)},
                       {"h", element_to_json(g, pcs[i].h)},
                       {"series", to_json(x.value(i))}});
  return {{"group", group_to_json(g)}, {"level", x.level()}, {"entries", entries}};
}

DevotoElement devoto_from_json(const json &j, GroupPtr group, std::size_t cap) {
  return guarded("devoto element", [&] {
    if (j.contains("terms")) {
      if (!group)
        group = FiniteGroup::trivial();
      return DevotoElement::constant(group, series_from_json(j));
    }
    if (!group) {
      if (!j.contains("group"))
        group = FiniteGroup::trivial();
      else
        group = group_from_json(j.at("group"), cap);
    }
    const int level = j.value("level", 1);
    if (level < 1)
      throw FormatError("level must be positive");
    DevotoElement x(group, level);
    std::set<int> seen;
    for (const auto &e : j.at("entries")) {
      const int g = element_from_json(*group, e.at("g"));
      const int h = element_from_json(*group, e.at("h"));
      if (!group->commute(g, h))
        throw FormatError("entry pair does not commute");
      const int pc = group->pair_class_of(g, h);
      if (!seen.insert(pc).second)
        throw FormatError("duplicate entry for one commuting-pair class");
      x.set_value(static_cast<std::size_t>(pc), series_from_json(e.at("series")));
    }
    return x;
  });
}

json to_json(const RepCharacter &chi) {
  const auto &g = *chi.group();
  json values = json::array();
  const auto &reps = g.conjugacy().reps;
  for (std::size_t i = 0; i < reps.size(); ++i)
    values.push_back({{"class_rep", element_to_json(g, reps[i])}, {"value", to_json(chi.values()[i])}});
  return {{"group", group_to_json(g)}, {"values", values}};
}

RepCharacter character_from_json(const json &j, GroupPtr group, std::size_t cap) {
  return guarded("character", [&] {
    if (!group)
      group = group_from_json(j.at("group"), cap);
    const auto &cd = group->conjugacy();
    std::vector<Cyclotomic> values(cd.reps.size());
    std::vector<char> seen(cd.reps.size(), 0);
    for (const auto &v : j.at("values")) {
      const int e = element_from_json(*group, v.at("class_rep"));
      const auto cls = static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(e)]);
      if (seen[cls])
        throw FormatError("duplicate value for one conjugacy class");
      seen[cls] = 1;
      values[cls] = cyclotomic_from_json(v.at("value"));
    }
    for (char s : seen)
      if (!s)
        throw FormatError("character is missing a conjugacy class");
    return RepCharacter(group, std::move(values));
  });
}

json to_json(const CoeffMap &c) {
  json a = json::array();
  for (const auto &[i, v] : c)
    a.push_back({{"i", i}, {"c", v}});
  return {{"coeffs", a}};
}

CoeffMap coeffmap_from_json(const json &j) {
  return guarded("coefficient map", [&] {
    CoeffMap c;
    for (const auto &e : j.at("coeffs")) {
      const long i = e.at("i").get<long>();
      if (!c.emplace(i, e.at("c").get<long>()).second)
        throw FormatError("duplicate index " + std::to_string(i));
    }
    return c;
  });
}

} // namespace tatek
