#include "breuil_tools/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "breuil/adjoints.hpp"
#include "breuil/descent.hpp"
#include "breuil/duality.hpp"
#include "breuil/errors.hpp"
#include "breuil/hom.hpp"
#include "breuil/mod_st.hpp"
#include "breuil/morphism.hpp"
#include "breuil_tools/manifest.hpp"

namespace breuil::cli {

namespace {

using manifest::json;
using manifest::Manifest;
using manifest::ManifestError;

// Raised for well-formed input that fails a check; carries the document to
// print.
struct Failed {
  json doc;
};

Manifest load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return manifest::parse_text(ss.str());
  } catch (const ManifestError& e) {
    throw ManifestError(path + ":" + e.where, std::string(e.what()).substr(e.where.size() + 2));
  }
}

template <class Map>
std::string pick(const Map& m, const std::string& wanted, const std::string& what, const std::string& path) {
  if (!wanted.empty()) {
    if (!m.count(wanted)) throw ManifestError(path, "no " + what + " named " + wanted);
    return wanted;
  }
  if (m.size() != 1) throw ManifestError(path, "expected exactly one " + what + "; select one by name");
  return m.begin()->first;
}

// Every parsed entity is validated before use.
void require_valid(const Object& o, const std::string& name) {
  auto rep = validate_object(*o);
  if (!rep.ok()) throw Failed{{{"error", "invalid object " + name}, {"report", manifest::report(rep)}}};
}

void require_valid(const Morphism& m, const std::string& name) {
  auto rep = validate_morphism(m);
  if (!rep.ok()) throw Failed{{{"error", "invalid morphism " + name}, {"report", manifest::report(rep)}}};
}

struct Loaded {
  Manifest m;
  std::string name;
  Object obj;
};

Loaded load_object(const std::string& path, const std::string& wanted) {
  Loaded l{load(path), {}, {}};
  l.name = pick(l.m.objects, wanted, "object", path);
  l.obj = l.m.objects.at(l.name);
  require_valid(l.obj, l.name);
  return l;
}

json with_objects(const RingParams& P, std::vector<std::pair<std::string, Object>> objs,
                  std::vector<std::tuple<std::string, Morphism, std::string, std::string>> maps = {}) {
  Manifest out;
  out.params = P;
  for (auto& [n, o] : objs) out.objects[n] = o;
  json j = manifest::print(out);
  for (auto& [n, m, s, t] : maps) j["morphisms"][n] = manifest::morphism(m, s, t);
  return j;
}

std::vector<int> parse_digits(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ManifestError("--digits", "not an integer: " + tok);
    }
  }
  if (out.empty()) throw ManifestError("--digits", "empty digit word");
  return out;
}

struct RingFlags {
  std::uint32_t p = 3;
  int f = 1, e = 1, r = 1;
  void attach(CLI::App* app) {
    app->add_option("--p", p, "residue characteristic")->required();
    app->add_option("--f", f, "residue degree");
    app->add_option("--e", e, "ramification index");
    app->add_option("--r", r, "filtration degree");
  }
  RingParams make() const {
    try {
      return RingParams::make(FiniteField::make(p, f), e, r);
    } catch (const BreuilError& ex) {
      throw ManifestError("--p/--f/--e/--r", ex.what());
    }
  }
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torsion Breuil modules: construction, validation and the operations on them."};
  // --h is the coefficient degree, so help is long-form only.
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "seed for randomized isomorphism search");

  std::function<json()> action;
  std::string file, file2, obj_name, obj_name2, mor_name;
  auto file_cmd = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", file, "manifest")->required();
    c->add_option("--object", obj_name, "object to use when the manifest has several");
    return c;
  };

  auto* validate = app.add_subcommand("validate", "validate every object and morphism of a manifest");
  validate->add_option("file", file, "manifest")->required();
  validate->callback([&] {
    action = [&] {
      Manifest m = load(file);
      json j{{"objects", json::object()}, {"morphisms", json::object()}};
      bool ok = true;
      for (const auto& [n, o] : m.objects) {
        auto rep = validate_object(*o);
        ok = ok && rep.ok();
        j["objects"][n] = manifest::report(rep);
        j["objects"][n]["summary"] = manifest::summary(*o);
      }
      for (const auto& [n, mor] : m.morphisms) {
        auto rep = validate_morphism(mor);
        ok = ok && rep.ok();
        j["morphisms"][n] = manifest::report(rep);
      }
      j["ok"] = ok;
      if (!ok) throw Failed{j};
      return j;
    };
  });

  bool no_N = false, use_coeff = false;
  auto* hom = app.add_subcommand("hom", "F_p-basis of Hom(a, b)");
  hom->add_option("a", file, "source manifest")->required();
  hom->add_option("b", file2, "target manifest (defaults to the source manifest)");
  hom->add_option("--source", obj_name, "source object name");
  hom->add_option("--target", obj_name2, "target object name");
  hom->add_flag("--no-N", no_N, "ignore the monodromy operator");
  hom->add_flag("--coeff", use_coeff, "require equivariance for the coefficient action");
  hom->callback([&] {
    action = [&] {
      auto a = load_object(file, obj_name);
      auto b = file2.empty() ? load_object(file, obj_name2) : load_object(file2, obj_name2);
      HomOptions opt;
      opt.use_N = !no_N;
      opt.use_coeff = use_coeff;
      auto H = hom_basis(a.obj, b.obj, opt);
      json basis = json::array();
      for (const auto& f : H.basis()) basis.push_back(manifest::morphism(f, "source", "target"));
      return json{{"dimension", H.dim()}, {"basis", basis}};
    };
  });

  auto morphism_cmd = [&](const std::string& name, const std::string& help, bool kernel) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", file, "manifest")->required();
    c->add_option("--morphism", mor_name, "morphism to use when the manifest has several");
    c->callback([&, kernel] {
      action = [&, kernel] {
        Manifest m = load(file);
        auto n = pick(m.morphisms, mor_name, "morphism", file);
        const Morphism& f = m.morphisms.at(n);
        require_valid(f.source, "source");
        require_valid(f.target, "target");
        require_valid(f, n);
        auto kc = kernel ? kernel_mod(f) : cokernel_mod(f);
        const std::string res = kernel ? "kernel" : "cokernel";
        json j = kernel ? with_objects(m.params, {{res, kc.object}, {"source", f.source}},
                                       {{"inclusion", kc.map, res, "source"}})
                        : with_objects(m.params, {{res, kc.object}, {"target", f.target}},
                                       {{"projection", kc.map, "target", res}});
        j["summary"] = manifest::summary(*kc.object);
        return j;
      };
    });
  };
  morphism_cmd("ker", "kernel in Mod with its inclusion", true);
  morphism_cmd("coker", "cokernel in Mod with its projection", false);

  file_cmd("dual", "Cartier dual of a free object")->callback([&] {
    action = [&] {
      auto l = load_object(file, obj_name);
      auto d = dualize(l.obj);
      json j = with_objects(l.m.params, {{"dual", d}});
      j["summary"] = manifest::summary(*d);
      return j;
    };
  });

  file_cmd("modst", "the object built from phi_r(Fil) with its projection")->callback([&] {
    action = [&] {
      auto l = load_object(file, obj_name);
      auto ms = mod_st(l.obj);
      json j = with_objects(l.m.params, {{"modst", ms.object}, {"original", l.obj}},
                            {{"pr", ms.pr, "modst", "original"}});
      j["pr_is_isomorphism"] = is_isomorphism(ms.pr);
      return j;
    };
  });

  auto closure_cmd = [&](const std::string& name, const std::string& help, bool gen) {
    file_cmd(name, help)->callback([&, gen] {
      action = [&, gen] {
        auto l = load_object(file, obj_name);
        auto c = gen ? gen_closure(l.obj) : fil_closure(l.obj);
        json trace = json::array();
        for (const auto& s : c.trace)
          trace.push_back({{"M_orders", s.module_orders}, {"Fil_orders", s.fil_orders}, {"fp_length", s.fp_length}});
        json j = gen ? with_objects(l.m.params, {{"closure", c.object}, {"original", l.obj}},
                                    {{"map", c.map, "closure", "original"}})
                     : with_objects(l.m.params, {{"closure", c.object}, {"original", l.obj}},
                                    {{"map", c.map, "original", "closure"}});
        j["trace"] = trace;
        j["steps"] = c.steps() - 1;
        j["summary"] = manifest::summary(*c.object);
        return j;
      };
    });
  };
  closure_cmd("gen", "largest generated subobject", true);
  closure_cmd("fil", "universal quotient with injective iota", false);

  std::vector<std::string> sub_names;
  auto lattice_cmd = [&](const std::string& name, const std::string& help, bool sup) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", file, "manifest with substructures")->required();
    c->add_option("--subs", sub_names, "substructure names (default: all)")->delimiter(',');
    c->callback([&, sup] {
      action = [&, sup] {
        Manifest m = load(file);
        if (m.substructures.empty()) throw ManifestError(file, "no substructures");
        std::vector<std::string> names = sub_names;
        if (names.empty())
          for (const auto& [n, s] : m.substructures) names.push_back(n);
        std::vector<Substructure> subs;
        std::string owner;
        for (const auto& n : names) {
          if (!m.substructures.count(n)) throw ManifestError(file, "no substructure named " + n);
          const auto& [o, s] = m.substructures.at(n);
          if (!owner.empty() && o != owner) throw ManifestError(file, "substructures of different objects");
          owner = o;
          subs.push_back(s);
        }
        const Object& amb = m.objects.at(owner);
        require_valid(amb, owner);
        for (std::size_t i = 0; i < subs.size(); ++i) {
          auto rep = is_substructure(subs[i], *amb);
          if (!rep.ok()) throw Failed{{{"error", "not a substructure: " + names[i]}, {"report", manifest::report(rep)}}};
        }
        auto res = sup ? fiber_sup(subs, *amb) : fiber_inf(subs, *amb);
        json j = manifest::substructure(res);
        j["object"] = owner;
        j["report"] = manifest::report(is_substructure(res, *amb));
        return j;
      };
    });
  };
  lattice_cmd("sup", "supremum in the fiber lattice", true);
  lattice_cmd("inf", "infimum in the fiber lattice", false);

  RingFlags ring;
  std::string digits;
  int h = 1;
  bool simple_no_N = false;
  auto* sbuild = app.add_subcommand("simple-build", "the simple object attached to a digit word");
  ring.attach(sbuild);
  sbuild->add_option("--digits", digits, "comma separated digit word")->required();
  sbuild->add_option("--h", h, "coefficient degree");
  sbuild->add_flag("--no-N", simple_no_N, "build without monodromy");
  sbuild->callback([&] {
    action = [&] {
      auto P = ring.make();
      auto cls = canonicalize_digits(P.k->p(), parse_digits(digits), h);
      auto obj = build_simple(cls, P, !simple_no_N);
      json j = with_objects(P, {{"simple", obj}});
      j["class"] = {{"digits", cls.digits}, {"d", cls.d()}, {"d_h", cls.d_h()}, {"h", cls.h}};
      return j;
    };
  });

  auto* schar = app.add_subcommand("simple-char", "tame inertia character of a digit word");
  ring.attach(schar);
  schar->add_option("--digits", digits, "comma separated digit word")->required();
  schar->add_option("--h", h, "coefficient degree");
  schar->callback([&] {
    action = [&] {
      auto P = ring.make();
      auto cls = canonicalize_digits(P.k->p(), parse_digits(digits), h);
      auto c = tame_character(cls, P);
      json j = manifest::character(c);
      j["dual"] = manifest::character(dual_character(c, P));
      j["digits"] = cls.digits;
      return j;
    };
  });

  file_cmd("simple-identify", "match an object with coefficients against the simple classes")->callback([&] {
    action = [&] {
      auto l = load_object(file, obj_name);
      auto id = identify_simple(l.obj, seed);
      json j{{"candidates", id.candidates}};
      if (!id.match) {
        j["match"] = nullptr;
        throw Failed{j};
      }
      j["match"] = {{"digits", id.match->digits}, {"h", id.match->h}};
      return j;
    };
  });

  std::uint32_t canon_p = 3;
  auto* canon = app.add_subcommand("canon", "canonical representative of a digit word");
  canon->add_option("--p", canon_p, "residue characteristic")->required();
  canon->add_option("--digits", digits, "comma separated digit word")->required();
  canon->add_option("--h", h, "coefficient degree");
  canon->callback([&] {
    action = [&] {
      auto cls = canonicalize_digits(canon_p, parse_digits(digits), h);
      return json{{"digits", cls.digits}, {"d", cls.d()}, {"d_h", cls.d_h()}, {"h", cls.h}};
    };
  });

  std::uint32_t tame_n = 1;
  auto* dtame = file_cmd("descend-tame", "base change along u_K -> u_L^n with the trivial descent action");
  dtame->add_option("--n", tame_n, "ramification degree of L/K")->required();
  dtame->callback([&] {
    action = [&] {
      auto l = load_object(file, obj_name);
      auto ext = TameExtension::make(l.obj->params.k, tame_n);
      auto L = base_change_tame(l.obj, ext);
      json j = with_objects(L->params, {{"base_changed", L}});
      j["extension"] = {{"n", ext.n}, {"m", ext.m}, {"t", ext.t},
                        {"zeta", manifest::field_element(*ext.k, ext.zeta)},
                        {"omega", manifest::field_element(*ext.k, ext.omega(1))}};
      auto rep = validate_object(*L);
      j["report"] = manifest::report(rep);
      if (!rep.ok()) throw Failed{j};
      return j;
    };
  });

  int to_degree = 1;
  auto* dunram = file_cmd("descend-unram", "extend the residue field");
  dunram->add_option("--to-degree", to_degree, "degree of the new residue field over F_p")->required();
  dunram->callback([&] {
    action = [&] {
      auto l = load_object(file, obj_name);
      auto big = FiniteField::make(l.obj->params.k->p(), to_degree);
      auto X = base_change_unramified(l.obj, big);
      json j = with_objects(X->params, {{"base_changed", X}});
      auto rep = validate_object(*X);
      j["report"] = manifest::report(rep);
      if (!rep.ok()) throw Failed{j};
      return j;
    };
  });

  file_cmd("cris", "whether N(M) lies in uM")->callback([&] {
    action = [&] {
      auto l = load_object(file, obj_name);
      return json{{"cris", is_cris(*l.obj)}};
    };
  });

  std::vector<std::string> argv_store{"breuil"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  }

  try {
    json doc = action();
    out << doc.dump(2) << "\n";
    return kExitOk;
  } catch (const Failed& f) {
    out << f.doc.dump(2) << "\n";
    return kExitFailed;
  } catch (const ManifestError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BreuilError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace breuil::cli
