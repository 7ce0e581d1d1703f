#include "rbt/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rbt/version.hpp"

namespace rbt {

Json to_json(const Dyadic& x) { return x.str(); }

Dyadic dyadic_from_json(const Json& j) {
  if (j.is_number_integer())
    return Dyadic(j.get<std::int64_t>());
  return Dyadic::parse(j.get<std::string>());
}

Json to_json(const AffineMap& f) {
  Json b = Json::array();
  for (const Dyadic& x : f.translation)
    b.push_back(to_json(x));
  return Json{{"b", b}, {"B", f.linear.rows()}};
}

AffineMap affine_map_from_json(const Json& j) {
  DyVec b;
  for (const auto& x : j.at("b"))
    b.push_back(dyadic_from_json(x));
  return {b, IntMatrix::from_rows(j.at("B").get<std::vector<IntVec>>())};
}

Json to_json(const BottMatrix& a) { return Json{{"n", a.n()}, {"rows", a.rows()}}; }

BottMatrix bott_matrix_from_json(const Json& j) {
  BottMatrix a = BottMatrix::from_rows(j.at("rows").get<std::vector<IntVec>>());
  if (j.contains("n") && j.at("n").get<int>() != a.n())
    throw DimensionError("matrix JSON: 'n' does not match the rows");
  return a;
}

Json to_json(const GroupElement& x, int n) { return Json{{"v", x.v}, {"s", selector_string(x.s, n)}}; }

GroupElement group_element_from_json(const Json& j) {
  GroupElement x{j.at("v").get<IntVec>(), parse_selector(j.at("s").get<std::string>())};
  if (j.at("s").get<std::string>().size() != x.v.size())
    throw DimensionError("group element: selector and translation lengths differ");
  return x;
}

Json to_json(const CocycleTable& f) {
  Json out = Json::array();
  const std::uint32_t count = 1u << f.n;
  for (std::uint32_t s = 0; s < count; ++s)
    for (std::uint32_t u = 0; u < count; ++u) {
      const IntVec& v = f.at(s, u);
      if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; }))
        continue;
      out.push_back(Json{{"s", selector_string(s, f.n)}, {"u", selector_string(u, f.n)}, {"f", v}});
    }
  return out;
}

CocycleTable cocycle_table_from_json(const Json& j, int n) {
  CocycleTable f = CocycleTable::zero(n);
  for (const auto& e : j) {
    auto s = e.at("s").get<std::string>(), u = e.at("u").get<std::string>();
    auto v = e.at("f").get<IntVec>();
    if (static_cast<int>(s.size()) != n || static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
      throw DimensionError("cocycle entry has wrong dimension");
    f.at(parse_selector(s), parse_selector(u)) = v;
  }
  return f;
}

Json to_json(const AbelianInvariants& a) {
  return Json{{"free_rank", a.free_rank}, {"torsion", a.torsion}, {"text", a.str()}};
}

Json to_json(const Multiset& m) {
  Json out = Json::array();
  for (const auto& [value, count] : m)
    out.push_back(Json::array({value, count}));
  return out;
}

Json to_json(const Fingerprint& fp) {
  Json index_two = Json::array();
  for (const auto& a : fp.index_two)
    index_two.push_back(a.str());
  return Json{{"order", fp.order},
              {"element_orders", to_json(fp.element_orders)},
              {"center_order", fp.center_order},
              {"commutator_order", fp.commutator_order},
              {"abelianization", fp.abelianization.str()},
              {"class_sizes", to_json(fp.class_sizes)},
              {"index_two_abelianizations", index_two}};
}

Json to_json(const InvariantVector& v) {
  return Json{{"n", v.n},
              {"holonomy_rank", v.holonomy_rank},
              {"orientable", v.orientable},
              {"torus_rank", v.torus_rank},
              {"neg_count_multiset", v.neg_counts},
              {"abelianization", to_json(v.abelianization)},
              {"center_rank", v.center_rank},
              {"fingerprint_m2", to_json(v.m2)},
              {"fingerprint_m2_center", to_json(v.m2_center)},
              {"fingerprint_m4", to_json(v.m4)},
              {"fingerprint_m4_center", to_json(v.m4_center)}};
}

Json to_json(const Witness& w, const LabelTable& labels) {
  Json b = Json::array();
  for (const Dyadic& x : w.gamma.translation)
    b.push_back(to_json(x));
  return Json{{"n", w.n()},
              {"source", labels.name(w.source)},
              {"target", labels.name(w.target)},
              {"B", w.gamma.linear.rows()},
              {"b", b}};
}

namespace {

BottMatrix matrix_field(const Json& j, int n, const LabelTable& labels) {
  if (j.is_object())
    return bott_matrix_from_json(j);
  return parse_matrix_spec(j.get<std::string>(), labels, n);
}

}  // namespace

Witness witness_from_json(const Json& j, const LabelTable& labels) {
  const int n = j.value("n", 0);
  Witness w{matrix_field(j.at("source"), n, labels), matrix_field(j.at("target"), n, labels),
            affine_map_from_json(j)};
  if (n != 0 && (w.source.n() != n || w.target.n() != n || w.gamma.n() != n))
    throw DimensionError("witness: inconsistent dimensions");
  return w;
}

Json to_json(const SearchSpace& s) {
  Json t = Json::array();
  for (const Dyadic& x : s.translations)
    t.push_back(to_json(x));
  return Json{{"entry_bound", s.entry_bound}, {"translations", t}};
}

Json to_json(const Partition& p, const LabelTable& labels) {
  Json classes = Json::array();
  for (std::size_t k = 0; k < p.classes.size(); ++k) {
    const PartitionClass& c = p.classes[k];
    Json names = Json::array(), ids = Json::array(), witnesses = Json::array(), conj = Json::array();
    for (const auto& a : c.members) {
      names.push_back(labels.name(a));
      ids.push_back(a.bits());
    }
    for (const auto& w : c.witnesses)
      witnesses.push_back(to_json(w, labels));
    for (const auto& comp : matrix_conjugacy_components(c.members, p.space.entry_bound)) {
      Json part = Json::array();
      for (const auto& a : comp)
        part.push_back(labels.name(a));
      conj.push_back(part);
    }
    classes.push_back(Json{{"class", class_name(k)},
                           {"labels", names},
                           {"bits", ids},
                           {"orientable", c.orientable},
                           {"torus_rank", c.torus_rank},
                           {"witnesses", witnesses},
                           {"matrix_conjugacy_components", conj}});
  }
  Json seps = Json::array();
  for (const Separation& s : p.separations)
    seps.push_back(Json{{"pair", Json::array({labels.name(s.first), labels.name(s.second)})}, {"field", s.field}});
  return Json{{"version", version()},
              {"n", p.n},
              {"search_space", to_json(p.space)},
              {"classes", classes},
              {"separations", seps}};
}

Reference reference_from_json(const Json& j) {
  Reference r;
  r.n = j.at("n").get<int>();
  for (const auto& c : j.at("classes"))
    r.classes.push_back({c.at("name").get<std::string>(), c.at("orientable").get<bool>(),
                         c.at("torus_rank").get<int>(), c.at("labels").get<std::vector<std::string>>()});
  return r;
}

Reference load_reference(const std::string& path) { return reference_from_json(Json::parse(read_file(path))); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace rbt
