#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "brim/examples.hpp"
#include "brim/module_io.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kViolation = 1, kInput = 2, kResource = 3, kGenericity = 4 };

struct Globals {
  std::uint64_t characteristic = brim::Fp::kDefaultModulus;
  std::uint32_t trunc_cap = 64;
  std::uint64_t seed = 1;
  std::string format = "text";
};

struct Args {
  std::string ideal, ideal2, module, via = "auto", target;
  std::uint32_t pmax = 0;
  std::size_t k = 0;
  int a = 0, b = 0, c = 0;
  std::size_t corpus_size = 100;
  bool hard = false, with_limit = false;
  unsigned threads = 0;
};

std::string read_module_text(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(arg);
  if (!in) throw brim::InputError("cannot open module file '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string scalar_text(const json& e) { return e.is_string() ? e.get<std::string>() : e.dump(); }

bool looks_like_module(const std::string& arg) {
  return !arg.empty() && (arg.front() == '{' || arg == "-" || arg.ends_with(".json"));
}

template <brim::Field K>
class Runner {
 public:
  Runner(const Globals& g, const Args& a) : g_(g), a_(a) { opts_.trunc_cap = g.trunc_cap; }

  int run(const std::string& cmd) {
    if (cmd == "colength") return colength();
    if (cmd == "order") return emit({{"order", brim::order(ideal(a_.ideal))}});
    if (cmd == "mult") return emit({{"e", brim::hs_multiplicity(ideal(a_.ideal), g_.seed, opts_)}});
    if (cmd == "br-mult") return emit({{"e", brim::br_multiplicity(module(), g_.seed, opts_)}});
    if (cmd == "br-limit") return br_limit();
    if (cmd == "adjoint") return adjoint();
    if (cmd == "closure") return closure();
    if (cmd == "fitting") return fitting();
    if (cmd == "report") return report(module());
    if (cmd == "mabc") return report(brim::family_Mabc<K>(a_.a, a_.b, a_.c));
    if (cmd == "mixed") return mixed();
    if (cmd == "verify") return verify();
    if (cmd == "examples") return examples();
    throw brim::InputError("unknown command '" + cmd + "'");
  }

 private:
  brim::Ideal<K> ideal(const std::string& text) const { return brim::Ideal<K>::parse(text); }
  brim::Module<K> module() const { return brim::parse_module<K>(read_module_text(a_.module), opts_, g_.seed); }

  static json gens_json(const brim::Ideal<K>& I) {
    json out = json::array();
    for (const auto& g : I.gens()) out.push_back(g.to_string());
    return out;
  }

  int emit(const json& j, int code = kOk) const {
    if (g_.format == "json") {
      std::cout << j.dump(2) << "\n";
      return code;
    }
    for (const auto& [k, v] : j.items()) {
      if (v.is_array()) {
        std::string line;
        for (const auto& e : v) line += (line.empty() ? "" : ", ") + scalar_text(e);
        std::cout << k << ": " << line << "\n";
      } else {
        std::cout << k << ": " << scalar_text(v) << "\n";
      }
    }
    return code;
  }

  int colength() const {
    auto I = ideal(a_.ideal);
    if (auto st = I.staircase(); st && !st->is_m_primary())
      throw brim::InputError("the ideal is not m-primary, its colength is infinite");
    auto r = brim::colength(I, opts_);
    if (!r.finite()) throw brim::ResourceError("colength exceeds the truncation cap " + std::to_string(opts_.trunc_cap));
    return emit({{"colength", *r.value}, {"certified_at", r.certified_at}});
  }

  int br_limit() const {
    auto M = module();
    auto p = a_.pmax ? a_.pmax : static_cast<std::uint32_t>(M.rank()) + 3;
    return emit({{"e", brim::br_limit_multiplicity(M, p, opts_)}, {"pmax", p}});
  }

  int adjoint() const {
    auto I = ideal(a_.ideal);
    auto s = I.staircase();
    std::string via = a_.via;
    if (via == "auto") via = s ? "polyhedral" : "presentation";
    brim::Ideal<K> adj = brim::Ideal<K>::unit();
    if (via == "polyhedral") {
      if (!s) throw brim::PreconditionError("the polyhedral adjoint needs a monomial ideal");
      if (!s->is_m_primary()) throw brim::PreconditionError("ideal is not m-primary");
      adj = brim::Ideal<K>::from_staircase(brim::polyhedral_adjoint(*s));
    } else if (via == "presentation") {
      adj = brim::simplified(brim::adjoint_via_presentation(I, opts_).ideal, opts_);
    } else {
      throw brim::InputError("--via must be presentation or polyhedral");
    }
    return emit({{"adjoint", gens_json(adj)}, {"colength", brim::colength(adj, opts_).get()}, {"via", via}});
  }

  int closure() const {
    if (looks_like_module(a_.target)) {
      auto M = brim::parse_module<K>(read_module_text(a_.target), opts_, g_.seed);
      auto approx = brim::closure_approx(M, std::nullopt, g_.seed, opts_);
      json added = json::array();
      for (const auto& v : approx.added) {
        json col = json::array();
        for (const auto& p : v) col.push_back(p.to_string());
        added.push_back(col);
      }
      return emit({{"closure", brim::module_to_json(approx.closure)},
                   {"added", added},
                   {"exact", brim::to_string(approx.exact)},
                   {"ic_status", brim::to_string(brim::is_integrally_closed(M, g_.seed, opts_).status)}});
    }
    auto I = ideal(a_.target);
    if (auto s = I.staircase()) {
      if (!s->is_m_primary()) throw brim::PreconditionError("ideal is not m-primary");
      auto c = brim::newton_closure(*s);
      return emit({{"closure", gens_json(brim::Ideal<K>::from_staircase(c))},
                   {"exact", "certified"},
                   {"integrally_closed", c == *s}});
    }
    auto M = brim::Module<K>::from_ideal(I);
    auto approx = brim::closure_approx(M, std::nullopt, g_.seed, opts_);
    brim::PolyVector<K> gens;
    for (const auto& col : approx.closure.columns()) gens.push_back(col[0]);
    return emit({{"closure", gens_json(brim::simplified(brim::Ideal<K>(gens), opts_))},
                 {"exact", brim::to_string(approx.exact)}});
  }

  int fitting() const {
    auto M = module();
    auto F = brim::simplified(brim::fitting_ideal(M, a_.k), opts_);
    auto len = brim::colength(F, opts_);
    return emit({{"k", a_.k}, {"ideal", gens_json(F)}, {"colength", len.finite() ? json(*len.value) : json(nullptr)}});
  }

  int report(const brim::Module<K>& M) const {
    brim::ReportOptions ro;
    ro.with_limit = a_.with_limit;
    ro.limit_pmax = a_.pmax;
    auto r = brim::report(M, g_.seed, opts_, ro);
    auto bad = brim::violations(r.verdicts);
    for (const auto& v : bad) std::cerr << "verdict violated: " << v << "\n";
    if (g_.format == "json")
      std::cout << brim::to_json(r).dump(2) << "\n";
    else
      std::cout << brim::to_text(r);
    return bad.empty() ? kOk : kViolation;
  }

  int mixed() const {
    auto I = ideal(a_.ideal), J = ideal(a_.ideal2);
    auto e1 = brim::mixed_multiplicity(I, J, opts_);
    auto lhs = static_cast<std::int64_t>(brim::colength(brim::product(I, J), opts_).get()) -
               static_cast<std::int64_t>(brim::colength(I, opts_).get()) -
               static_cast<std::int64_t>(brim::colength(J, opts_).get());
    return emit({{"e1", e1}, {"length_difference", lhs}});
  }

  int verify() const {
    brim::CorpusConfig cfg;
    cfg.seed = g_.seed;
    cfg.random_count = a_.corpus_size;
    cfg.direct_sum_count = (a_.corpus_size + 3) / 4;
    cfg.include_grid = a_.corpus_size > 0;
    cfg.dense_count = a_.hard ? std::max<std::size_t>(1, a_.corpus_size / 10) : 0;
    cfg.threads = a_.threads;
    cfg.report.with_limit = a_.with_limit;
    auto summary = brim::verify_corpus<K>(cfg, opts_);
    auto j = brim::to_json(summary);
    for (const auto& f : j["failures"]) std::cerr << "failure: " << scalar_text(f["label"]) << "\n";
    if (g_.format == "json") {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "items: " << summary.entries.size() << "\nviolations: " << summary.violation_count
                << "\nerrors: " << summary.error_count << "\n";
      for (const auto& [name, t] : summary.tally)
        std::cout << "  " << name << ": held " << t.held << ", failed " << t.failed << ", skipped " << t.skipped
                  << "\n";
    }
    return summary.ok() ? kOk : kViolation;
  }

  int examples() const {
    brim::ExampleConfig cfg;
    cfg.seed = g_.seed;
    auto b = brim::example_suite<K>(cfg, opts_);
    if (g_.format == "json") {
      std::cout << brim::to_json(b).dump(2) << "\n";
    } else {
      for (const auto& c : b.checks)
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.section << ": " << c.name
                  << (c.detail.empty() ? "" : " -- " + c.detail) << "\n";
    }
    return b.ok() ? kOk : kViolation;
  }

  const Globals& g_;
  const Args& a_;
  brim::Options opts_;
};

template <class Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const brim::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const brim::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const brim::GenericityError& e) {
    std::cerr << "genericity failure: " << e.what() << "\n";
    return kGenericity;
  } catch (const brim::Error& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kViolation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lengths and multiplicities of ideals and modules over k[x,y] localized at (x,y)"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  Args a;
  app.add_option("--char", g.characteristic, "coefficient field characteristic (0 for the rationals)");
  app.add_option("--trunc-cap", g.trunc_cap, "largest truncation degree")->check(CLI::Range(2u, 4096u));
  app.add_option("--seed", g.seed, "seed for randomized choices");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto ideal_cmd = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("ideal", a.ideal, "comma-separated generators")->required();
    return s;
  };
  auto module_cmd = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("module", a.module, "module JSON file, inline JSON, or - for stdin")->required();
    return s;
  };
  ideal_cmd("colength", "colength of an ideal");
  ideal_cmd("order", "order of an ideal");
  ideal_cmd("mult", "Hilbert-Samuel multiplicity");
  module_cmd("br-mult", "Buchsbaum-Rim multiplicity via a minimal reduction");
  module_cmd("br-limit", "Buchsbaum-Rim multiplicity via symmetric powers")->add_option("--pmax", a.pmax);
  ideal_cmd("adjoint", "adjoint ideal")
      ->add_option("--via", a.via)
      ->check(CLI::IsMember({"auto", "presentation", "polyhedral"}));
  app.add_subcommand("closure", "integral closure of an ideal or module")
      ->add_option("target", a.target, "ideal or module JSON")
      ->required();
  module_cmd("fitting", "ideal of k-minors")->add_option("--k", a.k)->required();
  auto* rep = module_cmd("report", "invariant report with verdicts");
  rep->add_flag("--with-limit", a.with_limit, "also compute e(M) through symmetric powers");
  rep->add_option("--pmax", a.pmax);
  auto* mabc = app.add_subcommand("mabc", "report for the module M(a,b,c)");
  mabc->add_option("A", a.a)->required();
  mabc->add_option("B", a.b)->required();
  mabc->add_option("C", a.c)->required();
  mabc->add_flag("--with-limit", a.with_limit);
  auto* mixed = app.add_subcommand("mixed", "mixed multiplicity of two ideals");
  mixed->add_option("ideal", a.ideal)->required();
  mixed->add_option("ideal2", a.ideal2)->required();
  auto* verify = app.add_subcommand("verify", "run reports over a seeded corpus");
  verify->add_option("--corpus-size", a.corpus_size);
  verify->add_flag("--hard", a.hard, "add dense random-coefficient modules");
  verify->add_flag("--with-limit", a.with_limit, "also compare with the symmetric power route");
  verify->add_option("--threads", a.threads);
  app.add_subcommand("examples", "worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  return guarded([&] {
    if (g.characteristic == 0) return Runner<brim::Rational>(g, a).run(cmd);
    brim::Fp::set_modulus(g.characteristic);
    return Runner<brim::Fp>(g, a).run(cmd);
  });
}
