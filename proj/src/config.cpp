#include "incat/config.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "incat/bigraph.hpp"
#include "incat/forest.hpp"
#include "incat/incidence.hpp"
#include "incat/quiver.hpp"
#include "incat/relmonoid.hpp"
#include "incat/skew.hpp"
#include "incat/twogroup.hpp"

namespace incat {

using nlohmann::json;

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "coalgebra") return Suite::Coalgebra;
  if (name == "bialgebra") return Suite::Bialgebra;
  if (name == "weakhopf") return Suite::WeakHopf;
  if (name == "combinatorial") return Suite::Combinatorial;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Coalgebra: return "coalgebra";
    case Suite::Bialgebra: return "bialgebra";
    case Suite::WeakHopf: return "weakhopf";
    case Suite::Combinatorial: return "combinatorial";
    case Suite::All: return "all";
  }
  return "?";
}

const std::vector<std::string>& instance_kinds() {
  static const std::vector<std::string> kinds{"relmonoid", "monex",  "skew",  "forest", "bigraph",
                                              "quiver",    "xmod",   "normal", "aut"};
  return kinds;
}

namespace {

[[noreturn]] void bad(const std::string& msg) { throw InvariantViolation("config: " + msg); }

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int positive_int(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long>() < 1) bad(std::string("'") + key + "' must be a positive integer");
  return v.get<int>();
}

int int_or(const json& j, const char* key, int fallback, int min = 0) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long>() < min)
    bad(std::string("'") + key + "' must be an integer >= " + std::to_string(min));
  return v.get<int>();
}

std::string string_or(const json& j, const char* key, std::string fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) bad(std::string("'") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

FiniteMonoid::Table read_table(const json& desc, std::vector<std::string>& names) {
  names = field(desc, "elements").get<std::vector<std::string>>();
  const json& rows = field(desc, "table");
  if (!rows.is_array() || rows.size() != names.size()) bad("table must have one row per element");
  auto index = [&](const std::string& s) {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) bad("unknown element '" + s + "' in table");
    return static_cast<FiniteMonoid::Elem>(it - names.begin());
  };
  FiniteMonoid::Table t;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != names.size()) bad("table rows must have one entry per element");
    std::vector<FiniteMonoid::Elem> r;
    for (const auto& cell : row) r.push_back(index(cell.get<std::string>()));
    t.push_back(std::move(r));
  }
  return t;
}

FiniteMonoid::Elem find_unit(const FiniteMonoid::Table& t) {
  const int n = static_cast<int>(t.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = t[e][x] == x && t[x][e] == x;
    if (ok) return e;
  }
  bad("table has no two-sided unit");
}

FiniteGroup read_group(const json& desc) {
  if (!desc.is_object()) bad("group must be an object");
  if (desc.contains("cyclic")) return FiniteGroup::cyclic_group(positive_int(desc, "cyclic"));
  if (desc.contains("symmetric")) return FiniteGroup::symmetric(positive_int(desc, "symmetric"));
  if (desc.contains("alternating")) return FiniteGroup::alternating(positive_int(desc, "alternating"));
  if (desc.contains("permutations")) {
    auto gens = desc.at("permutations").get<std::vector<Permutation>>();
    if (gens.empty()) bad("'permutations' needs at least one generator");
    return FiniteGroup::from_permutations(gens, static_cast<int>(gens.front().size()));
  }
  if (desc.contains("table")) {
    std::vector<std::string> names;
    auto t = read_table(desc, names);
    auto unit = find_unit(t);
    return FiniteGroup(std::move(t), unit, std::move(names));
  }
  bad("group needs one of cyclic, symmetric, alternating, permutations, table");
}

FiniteMonoid read_monoid(const json& desc) {
  if (desc.is_object() && desc.contains("max_chain")) return FiniteMonoid::max_chain(positive_int(desc, "max_chain"));
  if (desc.is_object() && desc.contains("table") && !desc.contains("group")) {
    std::vector<std::string> names;
    auto t = read_table(desc, names);
    auto unit = find_unit(t);
    return FiniteMonoid(std::move(t), unit, std::move(names));
  }
  return read_group(desc);
}

FiniteMonoid::Elem element(const FiniteMonoid& m, const json& v) {
  auto s = v.is_string() ? v.get<std::string>() : v.dump();
  auto e = m.find(s);
  if (!e) bad("unknown element '" + s + "'");
  return *e;
}

Relation read_relation(const FiniteMonoid& m, const json& desc) {
  if (desc.is_string()) {
    if (desc == "equality") return Relation::equality(m.size());
    if (desc == "full") return Relation::full(m.size());
    bad("relation must be \"equality\", \"full\" or {\"pairs\": ...}");
  }
  std::vector<std::pair<Relation::Elem, Relation::Elem>> pairs;
  for (const auto& p : field(desc, "pairs")) {
    if (!p.is_array() || p.size() != 2) bad("relation pairs are [x, y] meaning x <= y");
    pairs.emplace_back(element(m, p[0]), element(m, p[1]));
  }
  return Relation::closure(m.size(), pairs);
}

template <class T>
std::vector<T> take_sample(std::vector<T> all, const VerifyOptions& o, Report& header) {
  header.note("fragment: " + std::to_string(all.size()) + " morphisms");
  if (o.sample && *o.sample < all.size()) {
    std::mt19937_64 rng(o.seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(*o.sample);
    std::sort(all.begin(), all.end());
    header.note("sample: " + std::to_string(all.size()) + " morphisms, seed " + std::to_string(o.seed));
  }
  return all;
}

// Shared implementation over a concrete category. Kinds override the hooks.
template <class C>
class CategoryInstance : public Instance {
 public:
  using Mor = MorOf<C>;

  CategoryInstance(std::string kind, C c, Rational natural_scale, std::optional<Rational> scale, int default_size)
      : kind_(std::move(kind)),
        c_(std::move(c)),
        natural_(std::move(natural_scale)),
        override_(std::move(scale)),
        default_size_(default_size) {}

  std::string kind() const override { return kind_; }
  std::string name() const override { return c_.name(); }

  bool supports(Suite s) const override {
    if (s == Suite::All) return true;
    if (s == Suite::WeakHopf) return is_two_group();
    if (s == Suite::Bialgebra || s == Suite::Combinatorial) return !is_two_group();
    return true;
  }

  Report verify(Suite s, const VerifyOptions& o) const override {
    if (!supports(s)) throw Unsupported("suite " + suite_name(s) + " does not apply to kind " + kind_);
    const int size = o.max_size.value_or(default_size_);
    if (size < 0) throw PreconditionViolation("max-size must be non-negative");
    Report report(name() + ": suite " + suite_name(s));
    report.note("kind: " + kind_);
    report.note("bound: " + std::to_string(size));
    auto sample = take_sample(fragment(size), o, report);
    if (s == Suite::All) {
      for (Suite t : {Suite::Coalgebra, Suite::Bialgebra, Suite::Combinatorial, Suite::WeakHopf})
        if (supports(t)) run(t, sample, o.exec, report);
    } else {
      run(s, sample, o.exec, report);
    }
    return report;
  }

  std::string coproduct(const std::string& literal) const override {
    Incidence<C> inc(c_, coalgebra_scale());
    return inc.render(inc.coproduct(parse_literal(literal)));
  }

  std::string antipode(const std::string& literal, bool) const override {
    const Mor f = parse_literal(literal);
    Incidence<C> inc(c_, override_.value_or(Rational(1)));
    try {
      CombinatorialAntipode<C> S(inc);
      return inc.render(S(f));
    } catch (const PreconditionViolation& e) {
      throw Unsupported(name() + " has no antipode: " + std::string(e.what()) +
                        "; the incidence bialgebra is not a Hopf algebra");
    } catch (const Divergence& e) {
      throw Unsupported(name() + " has no antipode: " + std::string(e.what()));
    }
  }

 protected:
  virtual std::vector<Mor> fragment(int size) const = 0;
  virtual Mor parse_literal(const std::string& text) const = 0;
  virtual bool is_two_group() const { return false; }
  virtual bool group_objects() const { return false; }
  virtual PairScope pair_scope() const { return PairScope::ProductInSample; }
  virtual std::function<Mor(const Mor&)> weak_antipode() const { return {}; }

  Rational coalgebra_scale() const { return override_.value_or(natural_); }

  void run(Suite s, const std::vector<Mor>& sample, Exec exec, Report& out) const {
    switch (s) {
      case Suite::Coalgebra: {
        Incidence<C> inc(c_, coalgebra_scale());
        out.merge(check_coalgebra(inc, sample, exec));
        break;
      }
      case Suite::Bialgebra: {
        Incidence<C> inc(c_, override_.value_or(Rational(1)));
        out.merge(check_bialgebra(inc, sample, pair_scope(), exec));
        if (group_objects()) {
          try {
            CombinatorialAntipode<C> S(inc);
            out.merge(check_antipode(inc, S, sample));
          } catch (const Error& e) {
            out.add("antipode", name(), false, e.what());
          }
        }
        break;
      }
      case Suite::Combinatorial:
        out.merge(check_combinatorial(c_, sample, exec));
        break;
      case Suite::WeakHopf: {
        Incidence<C> inc(c_, coalgebra_scale());
        out.merge(check_weak_hopf(inc, weak_antipode(), sample, exec));
        break;
      }
      case Suite::All:
        break;
    }
  }

  std::string kind_;
  C c_;
  Rational natural_;
  std::optional<Rational> override_;
  int default_size_;
};

class RelMonoidInstance final : public CategoryInstance<RelMonoidCategory> {
 public:
  using CategoryInstance::CategoryInstance;

 protected:
  std::vector<Mor> fragment(int) const override { return c_.morphisms(); }
  Mor parse_literal(const std::string& text) const override {
    auto m = c_.parse(text);
    if (!m) throw ParseError("expected (x,y) with x <= y in " + c_.name(), 0);
    return *m;
  }
  bool group_objects() const override {
    for (int x = 0; x < c_.monoid().size(); ++x)
      if (!c_.monoid().inverse(x)) return false;
    return true;
  }
  PairScope pair_scope() const override { return PairScope::AllPairs; }
};

class MonexInstance final : public CategoryInstance<FreeMonoidCategory> {
 public:
  using CategoryInstance::CategoryInstance;

  std::string antipode(const std::string& literal, bool) const override {
    parse_literal(literal);
    throw Unsupported(name() + " has no antipode: objects other than the empty word are not invertible, "
                      "so the incidence bialgebra is not a Hopf algebra");
  }

 protected:
  std::vector<Mor> fragment(int size) const override { return c_.morphisms_up_to(static_cast<std::size_t>(size)); }
  Mor parse_literal(const std::string& text) const override { return c_.parse(text); }
};

class SkewInstance final : public CategoryInstance<SkewCategory> {
 public:
  using CategoryInstance::CategoryInstance;

 protected:
  std::vector<Mor> fragment(int size) const override { return c_.shapes_up_to(size); }
  Mor parse_literal(const std::string& text) const override { return c_.parse(text); }
};

bool operadic_literal(const std::string& text) {
  auto p = text.find_first_not_of(" \t");
  return p != std::string::npos && (text[p] == '[' || text.compare(p, 3, "id(") == 0);
}

class ForestInstance final : public CategoryInstance<ForestCategory> {
 public:
  ForestInstance(ForestCategory c, std::optional<Rational> scale, int default_size, int leaves, int roots)
      : CategoryInstance("forest", c, Rational(1), std::move(scale), default_size), leaves_(leaves), roots_(roots) {}

  std::string coproduct(const std::string& literal) const override {
    if (operadic_literal(literal)) return CategoryInstance::coproduct(literal);
    return render(ck_coproduct(parse_core(literal)));
  }
  std::string antipode(const std::string& literal, bool corollary) const override {
    if (operadic_literal(literal)) return CategoryInstance::antipode(literal, corollary);
    return render(ck_antipode(parse_core(literal)));
  }

 protected:
  std::vector<Mor> fragment(int size) const override { return c_.forests(size, leaves_, roots_); }
  Mor parse_literal(const std::string& text) const override { return parse_forest(text); }

 private:
  int leaves_;
  int roots_;
};

class BigraphInstance final : public CategoryInstance<BigraphCategory> {
 public:
  BigraphInstance(BigraphBounds bounds, std::optional<Rational> scale)
      : CategoryInstance("bigraph", BigraphCategory{}, Rational(1), std::move(scale), bounds.max_vertices),
        bounds_(std::move(bounds)) {}

 protected:
  std::vector<Mor> fragment(int size) const override {
    auto b = bounds_;
    b.max_vertices = size;
    return bigraph_fragment(b);
  }
  Mor parse_literal(const std::string& text) const override { return c_.parse(text); }

 private:
  BigraphBounds bounds_;
};

class QuiverInstance final : public CategoryInstance<QuiverCategory> {
 public:
  using CategoryInstance::CategoryInstance;

 protected:
  std::vector<Mor> fragment(int size) const override { return c_.paths_up_to(size); }
  Mor parse_literal(const std::string& text) const override { return c_.parse(text); }
  bool group_objects() const override { return true; }
  PairScope pair_scope() const override { return PairScope::AllPairs; }
};

class TwoGroupInstance final : public CategoryInstance<TwoGroupCategory> {
 public:
  TwoGroupInstance(std::string kind, TwoGroupCategory c, std::optional<Rational> scale)
      : CategoryInstance(std::move(kind), c, Rational(static_cast<long>(source_subgroup(c).size())),
                         std::move(scale), 0) {}

  std::string antipode(const std::string& literal, bool corollary) const override {
    const Mor f = parse_literal(literal);
    const Mor s = corollary ? corollary_antipode(c_, f) : theorem_antipode(c_, f);
    return "1*" + c_.render(s);
  }

 protected:
  std::vector<Mor> fragment(int) const override { return c_.morphisms(); }
  Mor parse_literal(const std::string& text) const override { return c_.parse(text); }
  bool is_two_group() const override { return true; }
  std::function<Mor(const Mor&)> weak_antipode() const override {
    return [this](const Mor& f) { return theorem_antipode(c_, f); };
  }
};

std::unique_ptr<Instance> build(const InstanceConfig& cfg) {
  const json& j = cfg.payload;
  const std::string label = string_or(j, "label", cfg.kind);
  if (cfg.kind == "relmonoid") {
    FiniteMonoid m = read_monoid(field(j, "monoid"));
    Relation r = read_relation(m, j.contains("relation") ? j.at("relation") : json("equality"));
    return std::make_unique<RelMonoidInstance>(cfg.kind, RelMonoidCategory(m, r, label), Rational(1), cfg.scale, 0);
  }
  if (cfg.kind == "monex") {
    const std::string alphabet = string_or(j, "alphabet", "xy");
    const std::string rel = string_or(j, "relation", "equal-length");
    FreeMonoidCategory::Kind k;
    if (rel == "equal-length")
      k = FreeMonoidCategory::Kind::EqualLength;
    else if (rel == "equality")
      k = FreeMonoidCategory::Kind::Equality;
    else
      bad("monex relation must be \"equal-length\" or \"equality\"");
    if (alphabet.empty()) bad("alphabet must be nonempty");
    return std::make_unique<MonexInstance>(cfg.kind, FreeMonoidCategory(alphabet, k), Rational(1), cfg.scale,
                                           cfg.max_size.value_or(3));
  }
  if (cfg.kind == "skew")
    return std::make_unique<SkewInstance>(cfg.kind, SkewCategory{}, Rational(1), cfg.scale, cfg.max_size.value_or(4));
  if (cfg.kind == "forest") {
    return std::make_unique<ForestInstance>(ForestCategory{}, cfg.scale, cfg.max_size.value_or(3),
                                            int_or(j, "max_leaves", 2), int_or(j, "max_roots", 2));
  }
  if (cfg.kind == "bigraph") {
    BigraphBounds b;
    b.max_vertices = cfg.max_size.value_or(1);
    b.max_ports = int_or(j, "max_ports", 1);
    const int places = int_or(j, "max_places", 1);
    const int names = int_or(j, "max_names", 1);
    b.max_roots = b.max_sites = places;
    b.max_inner = b.max_outer = names;
    if (j.contains("labels")) b.labels = j.at("labels").get<std::vector<std::string>>();
    if (b.labels.empty()) bad("labels must be nonempty");
    return std::make_unique<BigraphInstance>(b, cfg.scale);
  }
  if (cfg.kind == "quiver") {
    FiniteGroup g = read_group(field(j, "group"));
    std::optional<QuiverCategory::Obj> z;
    if (j.contains("z") && !j.at("z").is_null()) z = element(g, j.at("z"));
    return std::make_unique<QuiverInstance>(cfg.kind, QuiverCategory(g, z), Rational(1), cfg.scale,
                                            cfg.max_size.value_or(3));
  }
  if (cfg.kind == "xmod") {
    FiniteGroup G = read_group(field(j, "G"));
    FiniteGroup H = read_group(field(j, "H"));
    std::vector<CrossedModule::Elem> tau(H.size(), -1);
    for (const auto& [h, g] : field(j, "tau").items()) tau[element(H, json(h))] = element(G, g);
    if (std::count(tau.begin(), tau.end(), -1)) bad("tau must map every element of H");
    std::vector<std::vector<CrossedModule::Elem>> alpha(G.size(), std::vector<CrossedModule::Elem>(H.size(), -1));
    for (const auto& [g, row] : field(j, "alpha").items())
      for (const auto& [h, v] : row.items()) alpha[element(G, json(g))][element(H, json(h))] = element(H, v);
    for (const auto& row : alpha)
      if (std::count(row.begin(), row.end(), -1)) bad("alpha must be given on every pair (g, h)");
    auto xm = validate_crossed_module(G, H, tau, alpha, label);
    return std::make_unique<TwoGroupInstance>(cfg.kind, TwoGroupCategory(xm), cfg.scale);
  }
  if (cfg.kind == "normal") {
    FiniteGroup G = read_group(field(j, "group"));
    std::vector<CrossedModule::Elem> N;
    for (const auto& v : field(j, "subgroup")) N.push_back(element(G, v));
    std::sort(N.begin(), N.end());
    N.erase(std::unique(N.begin(), N.end()), N.end());
    return std::make_unique<TwoGroupInstance>(cfg.kind, TwoGroupCategory(normal_subgroup_xmod(G, N, label)), cfg.scale);
  }
  if (cfg.kind == "aut") {
    FiniteGroup G = read_group(field(j, "group"));
    return std::make_unique<TwoGroupInstance>(cfg.kind, TwoGroupCategory(aut_two_group(G, label)), cfg.scale);
  }
  bad("unknown kind '" + cfg.kind + "'");
}

}  // namespace

InstanceConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!j.is_object()) bad("top level must be an object");
  InstanceConfig cfg;
  cfg.kind = field(j, "kind").get<std::string>();
  const auto& kinds = instance_kinds();
  if (std::find(kinds.begin(), kinds.end(), cfg.kind) == kinds.end()) bad("unknown kind '" + cfg.kind + "'");
  if (j.contains("max_size")) cfg.max_size = positive_int(j, "max_size");
  if (j.contains("scale")) {
    const json& s = j.at("scale");
    cfg.scale = s.is_string() ? Rational::parse(s.get<std::string>()) : Rational(s.get<long>());
    if (cfg.scale->is_zero()) bad("scale must be nonzero");
  }
  cfg.payload = std::move(j);
  return cfg;
}

InstanceConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionViolation("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::unique_ptr<Instance> make_instance(const InstanceConfig& config) {
  try {
    return build(config);
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

}  // namespace incat
