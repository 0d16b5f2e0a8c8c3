#include "lieframe/catalog.hpp"

namespace lieframe {

namespace {

using Entry = StructureConstants::Entry;

// 1-based index helper matching the printed tables.
Entry e(int mu, int kappa, int lambda, Rat v) {
  return Entry{mu - 1, kappa - 1, lambda - 1, std::move(v)};
}

StructureConstants build(int dim, const std::vector<Entry>& entries) {
  return StructureConstants::from_entries(dim, entries);
}

ParamMap pm(std::initializer_list<std::pair<const char*, Rat>> kv) {
  ParamMap m;
  for (const auto& [k, v] : kv) m[k] = v;
  return m;
}

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> entries;

  auto fixed = [&](std::string key, std::string family, int dim,
                   std::vector<Entry> rows, bool nilpotent = false) {
    CatalogEntry ce;
    ce.key = std::move(key);
    ce.family = std::move(family);
    ce.dim = dim;
    ce.build = [dim, rows = std::move(rows)](const ParamMap&) {
      return build(dim, rows);
    };
    ce.sample_params = {ParamMap{}};
    ce.nilpotent = nilpotent;
    entries.push_back(std::move(ce));
  };

  // --- two-dimensional ---
  fixed("2A1", "2 A(1)", 2, {}, true);
  fixed("A2", "A(2)", 2, {e(2, 1, 2, 1)});

  // --- three-dimensional (Bianchi types) ---
  fixed("Bianchi_I", "Bianchi type I", 3, {}, true);
  fixed("Bianchi_II", "Bianchi type II (Weyl)", 3, {e(1, 2, 3, 1)}, true);
  fixed("Bianchi_III", "Bianchi type III", 3, {e(2, 1, 2, 1)});
  fixed("Bianchi_IV", "Bianchi type IV", 3,
        {e(1, 1, 3, 1), e(1, 2, 3, 1), e(2, 2, 3, 1)});
  fixed("Bianchi_V", "Bianchi type V", 3, {e(1, 1, 3, 1), e(2, 2, 3, 1)});

  {
    CatalogEntry ce;
    ce.key = "Bianchi_VI_h";
    ce.family = "Bianchi type VI(h)";
    ce.dim = 3;
    ce.param_names = {"h"};
    ce.validate = [](const ParamMap& p) -> std::string {
      const Rat& h = p.at("h");
      if (h == 0) return "h = 0 is type III in another basis";
      if (h == 1) return "h = 1 is type V";
      return {};
    };
    ce.build = [](const ParamMap& p) {
      return build(3, {e(1, 1, 3, 1), e(2, 2, 3, p.at("h"))});
    };
    ce.sample_params = {pm({{"h", rat(-1)}}), pm({{"h", rat(-1, 2)}}),
                        pm({{"h", rat(2)}})};
    entries.push_back(std::move(ce));
  }
  {
    CatalogEntry ce;
    ce.key = "Bianchi_VII_h";
    ce.family = "Bianchi type VII(h)";
    ce.dim = 3;
    ce.param_names = {"h"};
    ce.validate = [](const ParamMap& p) -> std::string {
      if (p.at("h") < 0) return "h >= 0";
      return {};
    };
    ce.build = [](const ParamMap& p) {
      const Rat& h = p.at("h");
      return build(3, {e(1, 1, 3, h), e(2, 1, 3, -1), e(1, 2, 3, 1),
                       e(2, 2, 3, h)});
    };
    ce.sample_params = {pm({{"h", rat(0)}}), pm({{"h", rat(1, 2)}}),
                        pm({{"h", rat(2)}})};
    entries.push_back(std::move(ce));
  }

  fixed("Bianchi_VIII", "Bianchi type VIII", 3,
        {e(1, 2, 3, -1), e(2, 1, 3, -1), e(3, 1, 2, 1)});
  fixed("Bianchi_IX", "Bianchi type IX", 3,
        {e(1, 2, 3, 1), e(2, 1, 3, -1), e(3, 1, 2, 1)});

  // --- four-dimensional ---
  fixed("4A1", "4 A(1)", 4, {}, true);
  fixed("A2+2A1", "A(2) + 2 A(1)", 4, {e(2, 1, 2, 1)});
  fixed("2A2", "2 A(2)", 4, {e(2, 1, 2, 1), e(4, 3, 4, 1)});
  fixed("A3,1+A1", "A(3,1) + A(1)", 4, {e(1, 2, 3, 1)}, true);
  fixed("A3,2+A1", "A(3,2) + A(1)", 4,
        {e(1, 1, 3, 1), e(1, 2, 3, 1), e(2, 2, 3, 1)});
  fixed("A3,3+A1", "A(3,3) + A(1)", 4, {e(1, 1, 3, 1), e(2, 2, 3, 1)});
  fixed("A3,4+A1", "A(3,4) + A(1)", 4, {e(1, 1, 3, 1), e(2, 2, 3, -1)});
  {
    CatalogEntry ce;
    ce.key = "A3,5+A1";
    ce.family = "A(3,5)(alpha) + A(1)";
    ce.dim = 4;
    ce.param_names = {"alpha"};
    ce.validate = [](const ParamMap& p) -> std::string {
      const Rat& a = p.at("alpha");
      if (a == 0 || a >= 1 || a <= -1) return "0 < |alpha| < 1";
      return {};
    };
    ce.build = [](const ParamMap& p) {
      return build(4, {e(1, 1, 3, 1), e(2, 2, 3, p.at("alpha"))});
    };
    ce.sample_params = {pm({{"alpha", rat(1, 2)}}), pm({{"alpha", rat(-1, 2)}}),
                        pm({{"alpha", rat(3, 4)}})};
    entries.push_back(std::move(ce));
  }
  fixed("A3,6+A1", "A(3,6) + A(1)", 4, {e(1, 2, 3, 1), e(2, 1, 3, -1)});
  {
    CatalogEntry ce;
    ce.key = "A3,7+A1";
    ce.family = "A(3,7)(alpha) + A(1)";
    ce.dim = 4;
    ce.param_names = {"alpha"};
    ce.validate = [](const ParamMap& p) -> std::string {
      if (p.at("alpha") <= 0) return "alpha > 0";
      return {};
    };
    ce.build = [](const ParamMap& p) {
      const Rat& a = p.at("alpha");
      return build(4, {e(1, 1, 3, a), e(2, 1, 3, -1), e(1, 2, 3, 1),
                       e(2, 2, 3, a)});
    };
    ce.sample_params = {pm({{"alpha", rat(1, 2)}}), pm({{"alpha", rat(1)}}),
                        pm({{"alpha", rat(2)}})};
    entries.push_back(std::move(ce));
  }
  fixed("A3,8+A1", "A(3,8) + A(1)", 4,
        {e(1, 2, 3, -1), e(2, 1, 3, -1), e(3, 1, 2, 1)});
  fixed("A3,9+A1", "A(3,9) + A(1)", 4,
        {e(1, 2, 3, 1), e(2, 1, 3, -1), e(3, 1, 2, 1)});

  fixed("A4,1", "A(4,1)", 4, {e(1, 2, 4, 1), e(2, 3, 4, 1)}, true);
  {
    CatalogEntry ce;
    ce.key = "A4,2";
    ce.family = "A(4,2)(alpha)";
    ce.dim = 4;
    ce.param_names = {"alpha"};
    ce.validate = [](const ParamMap& p) -> std::string {
      if (p.at("alpha") == 0) return "alpha != 0";
      return {};
    };
    ce.build = [](const ParamMap& p) {
      return build(4, {e(1, 1, 4, p.at("alpha")), e(2, 2, 4, 1), e(2, 3, 4, 1),
                       e(3, 3, 4, 1)});
    };
    ce.sample_params = {pm({{"alpha", rat(1)}}), pm({{"alpha", rat(2)}}),
                        pm({{"alpha", rat(-1, 2)}})};
    entries.push_back(std::move(ce));
  }
  fixed("A4,3", "A(4,3)", 4, {e(1, 1, 4, 1), e(2, 3, 4, 1)});
  fixed("A4,4", "A(4,4)", 4,
        {e(1, 1, 4, 1), e(1, 2, 4, 1), e(2, 2, 4, 1), e(2, 3, 4, 1),
         e(3, 3, 4, 1)});
  {
    CatalogEntry ce;
    ce.key = "A4,5";
    ce.family = "A(4,5)(alpha,beta)";
    ce.dim = 4;
    ce.param_names = {"alpha", "beta"};
    ce.validate = [](const ParamMap& p) -> std::string {
      const Rat& a = p.at("alpha");
      const Rat& b = p.at("beta");
      if (a == 0 || b == 0) return "alpha*beta != 0";
      if (a < -1 || a > b || b > 1) return "-1 <= alpha <= beta <= 1";
      return {};
    };
    ce.build = [](const ParamMap& p) {
      return build(4, {e(1, 1, 4, 1), e(2, 2, 4, p.at("alpha")),
                       e(3, 3, 4, p.at("beta"))});
    };
    ce.sample_params = {pm({{"alpha", rat(1, 2)}, {"beta", rat(1)}}),
                        pm({{"alpha", rat(-1, 2)}, {"beta", rat(1, 2)}}),
                        pm({{"alpha", rat(1)}, {"beta", rat(1)}})};
    entries.push_back(std::move(ce));
  }
  {
    CatalogEntry ce;
    ce.key = "A4,6";
    ce.family = "A(4,6)(alpha,beta)";
    ce.dim = 4;
    ce.param_names = {"alpha", "beta"};
    ce.validate = [](const ParamMap& p) -> std::string {
      if (p.at("alpha") == 0) return "alpha != 0";
      if (p.at("beta") < 0) return "beta >= 0";
      return {};
    };
    ce.build = [](const ParamMap& p) {
      const Rat& a = p.at("alpha");
      const Rat& b = p.at("beta");
      return build(4, {e(1, 1, 4, a), e(2, 2, 4, b), e(2, 3, 4, 1),
                       e(3, 2, 4, -1), e(3, 3, 4, b)});
    };
    ce.sample_params = {pm({{"alpha", rat(1)}, {"beta", rat(0)}}),
                        pm({{"alpha", rat(1)}, {"beta", rat(1)}}),
                        pm({{"alpha", rat(-2)}, {"beta", rat(1, 2)}})};
    entries.push_back(std::move(ce));
  }
  fixed("A4,7", "A(4,7)", 4,
        {e(1, 1, 4, 2), e(2, 2, 4, 1), e(1, 2, 3, 1), e(2, 3, 4, 1),
         e(3, 3, 4, 1)});
  fixed("A4,8", "A(4,8)", 4, {e(1, 2, 3, 1), e(2, 2, 4, 1), e(3, 3, 4, -1)});
  {
    CatalogEntry ce;
    ce.key = "A4,9";
    ce.family = "A(4,9)(beta)";
    ce.dim = 4;
    ce.param_names = {"beta"};
    ce.validate = [](const ParamMap& p) -> std::string {
      const Rat& b = p.at("beta");
      if (b <= -1 || b > 1) return "-1 < beta <= 1";
      return {};
    };
    ce.build = [](const ParamMap& p) {
      const Rat& b = p.at("beta");
      return build(4, {e(1, 2, 3, 1), e(1, 1, 4, 1 + b), e(2, 2, 4, 1),
                       e(3, 3, 4, b)});
    };
    ce.sample_params = {pm({{"beta", rat(1, 2)}}), pm({{"beta", rat(1)}}),
                        pm({{"beta", rat(-1, 2)}})};
    entries.push_back(std::move(ce));
  }
  fixed("A4,10", "A(4,10)", 4, {e(1, 2, 3, 1), e(2, 3, 4, 1), e(3, 2, 4, -1)});
  {
    CatalogEntry ce;
    ce.key = "A4,11";
    ce.family = "A(4,11)(alpha)";
    ce.dim = 4;
    ce.param_names = {"alpha"};
    ce.validate = [](const ParamMap& p) -> std::string {
      if (p.at("alpha") <= 0) return "alpha > 0";
      return {};
    };
    ce.build = [](const ParamMap& p) {
      const Rat& a = p.at("alpha");
      return build(4, {e(1, 2, 3, 1), e(1, 1, 4, 2 * a), e(2, 2, 4, a),
                       e(3, 2, 4, -1), e(2, 3, 4, 1), e(3, 3, 4, a)});
    };
    ce.sample_params = {pm({{"alpha", rat(1, 4)}}), pm({{"alpha", rat(1)}}),
                        pm({{"alpha", rat(2)}})};
    entries.push_back(std::move(ce));
  }
  fixed("A4,12", "A(4,12)", 4,
        {e(1, 1, 3, 1), e(1, 2, 4, 1), e(2, 1, 4, -1), e(2, 2, 3, 1)});

  return entries;
}

std::vector<CatalogAlias> make_aliases() {
  return {
      {"3A1", "Bianchi_I", {}},
      {"A3,1", "Bianchi_II", {}},
      {"Weyl", "Bianchi_II", {}},
      {"A1+A2", "Bianchi_III", {}},
      {"A3,2", "Bianchi_IV", {}},
      {"A3,3", "Bianchi_V", {}},
      {"A3,4", "Bianchi_VI_h", pm({{"h", rat(-1)}})},
      {"E(1,1)", "Bianchi_VI_h", pm({{"h", rat(-1)}})},
      {"A3,5", "Bianchi_VI_h", {}},
      {"A3,6", "Bianchi_VII_h", pm({{"h", rat(0)}})},
      {"E(2)", "Bianchi_VII_h", pm({{"h", rat(0)}})},
      {"A3,7", "Bianchi_VII_h", {}},
      {"A3,8", "Bianchi_VIII", {}},
      {"A3,9", "Bianchi_IX", {}},
  };
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_entries();
  return entries;
}

const std::vector<CatalogAlias>& catalog_aliases() {
  static const std::vector<CatalogAlias> aliases = make_aliases();
  return aliases;
}

}  // namespace lieframe
