// hlat: build hermitian forms, transfer them to integral lattices, analyze
// Gram matrices and rerun the full claim list.
//
// Exit codes: 0 ok, 1 verification failure, 2 I/O or parse error,
// 3 domain precondition, 4 enumeration budget exhausted.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hlat/charvec.hpp"
#include "hlat/forms.hpp"
#include "hlat/io.hpp"
#include "hlat/lattice.hpp"
#include "hlat/roots.hpp"
#include "hlat/verify.hpp"

namespace {

using namespace hlat;
using io::Json;

enum Exit { ok = 0, verification_failed = 1, io_error = 2, domain_error = 3, budget_exhausted = 4 };

void emit(const Json& j, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << j.dump() << '\n';
  else
    io::write_json(out, j);
}

EnumerationOptions enumeration_options(unsigned long long budget) {
  EnumerationOptions opt;
  opt.node_budget = budget;
  return opt;
}

std::string vec_str(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string a;
  std::optional<Int> k;
  std::string out;
};

int cmd_build(const BuildArgs& args) {
  const HermitianForm form = args.k ? build_L_k(*args.k) : build_L_a(parse_laurent(args.a));
  emit(io::to_json(form), args.out);
  if (!args.out.empty() && args.out != "-")
    std::cout << "det " << to_string(form_det(form)) << ", hermitian, size " << form.size() << '\n';
  return ok;
}

struct TransferArgs {
  Int n = 1;
  std::string form_file;
  std::string out;
};

int cmd_transfer(const TransferArgs& args) {
  if (args.n < 1) throw DomainError("--n must be >= 1");
  const Json j = io::read_json(args.form_file);
  CyclicForm cf = j.contains("n") ? io::cyclic_form_from_json(j) : reduce_form(io::hermitian_from_json(j), args.n);
  if (cf.modulus() != args.n)
    throw InputError("form file is over Z[Z/" + std::to_string(cf.modulus()) + "], not Z[Z/" + std::to_string(args.n) + "]");
  const GramMatrix g = transfer(cf);
  emit(io::to_json(g), args.out);
  if (!args.out.empty() && args.out != "-") {
    const auto r = validate(g);
    std::cout << "rank " << r.rank << ", det " << r.determinant << (r.positive_definite ? ", positive definite" : "")
              << (r.odd ? ", odd" : ", even") << '\n';
  }
  return ok;
}

struct AnalyzeArgs {
  std::string gram_file;
  bool defect = false, mu = false, roots = false, standardize = false, identify = false;
  unsigned long long budget = EnumerationOptions{}.node_budget;
  std::string format = "text";
};

int cmd_analyze(AnalyzeArgs args) {
  const GramMatrix g = io::gram_from_json(io::read_json(args.gram_file));
  if (!(args.defect || args.mu || args.roots || args.standardize || args.identify)) {
    args.defect = args.mu = args.roots = args.standardize = true;
    args.identify = g.rank() <= 16;
  }
  const auto opt = enumeration_options(args.budget);
  const bool json = args.format == "json";

  const auto v = validate(g);
  Json report{{"rank", v.rank},
              {"determinant", v.determinant.str()},
              {"positive_definite", v.positive_definite},
              {"odd", v.odd}};
  if (!json)
    std::cout << "rank " << v.rank << ", det " << v.determinant
              << (v.positive_definite ? ", positive definite" : ", not positive definite") << (v.odd ? ", odd" : ", even")
              << '\n';
  if (!v.positive_definite) throw DomainError("Gram matrix is not positive definite");
  if ((args.defect || args.mu || args.standardize || args.identify) && !v.unimodular())
    throw DomainError("defect, mu and standardness need a unimodular Gram matrix");

  const Enumerator en(g);
  Json skipped = Json::array();
  auto guarded = [&](const char* section, auto&& body) {
    try {
      body();
    } catch (const BudgetExceeded& e) {
      skipped.push_back(section);
      if (!json) std::cout << section << ": skipped (" << e.what() << ")\n";
    }
  };

  if (args.defect || args.mu)
    guarded("characteristic", [&] {
      const CharReport cr = min_characteristic(en, opt);
      report["characteristic"] = io::to_json(cr);
      if (!json) {
        std::cout << "minimal characteristic norm " << cr.min_norm;
        if (args.defect) std::cout << ", defect " << cr.defect;
        if (args.mu) std::cout << ", mu " << cr.mu;
        std::cout << '\n';
      }
    });
  if (args.standardize)
    guarded("standardness", [&] {
      const auto s = is_standard(g, opt);
      report["standardness"] = io::to_json(s);
      if (json) return;
      if (s.standard) {
        std::cout << "standard: orthonormal basis (columns)\n";
        for (std::size_t i = 0; i < g.rank(); ++i) std::cout << "  " << vec_str(column(*s.orthonormal_basis, i)) << '\n';
      } else {
        std::cout << "not standard: characteristic witness of norm " << s.witness_norm << " < " << g.rank() << ' '
                  << vec_str(*s.witness) << '\n';
      }
    });
  if (args.roots)
    guarded("roots", [&] {
      const auto rs = root_system(g, root_vectors(en, opt));
      report["root_system"] = io::to_json(rs);
      if (!json)
        std::cout << "root system " << rs.label() << " (" << rs.total_roots << " roots, span rank " << rs.spanning_rank
                  << ")\n";
    });
  if (args.identify)
    guarded("identify", [&] {
      const auto name = identify(g, opt);
      report["identify"] = name;
      if (!json) std::cout << "identified as " << name << '\n';
    });

  report["skipped"] = skipped;
  if (json) std::cout << report.dump() << '\n';
  return skipped.empty() ? ok : budget_exhausted;
}

struct VerifyArgs {
  Int max_n = 5;
  unsigned long long budget = EnumerationOptions{}.node_budget;
  std::string format = "text";
  bool timings = false;
  std::vector<std::string> overrides;
};

int cmd_verify(const VerifyArgs& args) {
  VerifyOptions opt;
  opt.max_n = args.max_n;
  opt.enumeration = enumeration_options(args.budget);
  for (const auto& spec : args.overrides) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("--override-vn expects N:FILE, got '" + spec + "'");
    Int n = 0;
    try {
      n = std::stoll(spec.substr(0, colon));
    } catch (const std::exception&) {
      throw InputError("--override-vn: bad n in '" + spec + "'");
    }
    opt.overrides.insert_or_assign(n, io::gram_from_json(io::read_json(spec.substr(colon + 1))));
  }
  const auto records = PaperVerifier(std::move(opt)).run();
  if (args.format == "json")
    std::cout << report_json(records, args.timings).dump() << '\n';
  else
    std::cout << report_text(records, args.timings);
  return any_failed(records) ? verification_failed : ok;
}

struct EnumerateArgs {
  std::string gram_file;
  Int bound = 1;
  bool characteristic = false;
  unsigned long long budget = EnumerationOptions{}.node_budget;
  std::string out;
};

int cmd_enumerate(const EnumerateArgs& args) {
  const GramMatrix g = io::gram_from_json(io::read_json(args.gram_file));
  const auto opt = enumeration_options(args.budget);
  const auto r = args.characteristic ? enumerate_coset(g, char_rep(g), args.bound, opt) : enumerate_short(g, args.bound, opt);
  emit(io::to_json(r), args.out);
  return ok;
}

int cmd_catalog(const std::string& name, const std::string& out) {
  emit(io::to_json(catalog_gram(name)), out);
  return ok;
}

int run(int argc, char** argv) {
  CLI::App app{"Hermitian forms over Z[x, x^-1], their cyclic transfers and unimodular lattice invariants", "hlat"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "write L(a) or L(k) as a form file");
  auto* a_opt = b->add_option("--a", build.a, "substitution a, e.g. \"x + x^-1\"");
  auto* k_opt = b->add_option("--k", build.k, "use a = x^b_k + x^-b_k");
  a_opt->excludes(k_opt);
  b->add_option("--out", build.out, "output file (default stdout)");

  TransferArgs tr;
  auto* t = app.add_subcommand("transfer", "reduce a form mod x^n - 1 and transfer it to a Gram matrix");
  t->add_option("--n", tr.n, "modulus n")->required();
  t->add_option("form", tr.form_file, "form file")->required();
  t->add_option("--out", tr.out, "output file (default stdout)");

  AnalyzeArgs an;
  auto* z = app.add_subcommand("analyze", "characteristic vectors, defect, standardness and roots of a Gram matrix");
  z->add_option("gram", an.gram_file, "Gram file")->required();
  z->add_flag("--defect", an.defect, "minimal characteristic norm and defect");
  z->add_flag("--mu", an.mu, "number of minimal characteristic vectors");
  z->add_flag("--roots", an.roots, "root system of the norm-2 vectors");
  z->add_flag("--standardize", an.standardize, "orthonormal basis or non-standard witness");
  z->add_flag("--identify", an.identify, "match against reference lattices (rank <= 16)");
  z->add_option("--budget", an.budget, "enumeration node budget");
  z->add_option("--format", an.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs ver;
  auto* vp = app.add_subcommand("verify-paper", "recompute every claim and print a pass/fail table");
  vp->add_option("--max-n", ver.max_n, "largest n for exact defect enumeration")->check(CLI::Range(1, 30));
  vp->add_option("--budget", ver.budget, "enumeration node budget");
  vp->add_option("--format", ver.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  vp->add_flag("--timings", ver.timings, "include elapsed time per record");
  vp->add_option("--override-vn", ver.overrides, "replace V_N by a Gram file, N:FILE");

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "short vectors, or characteristic vectors with --characteristic");
  e->add_option("gram", en.gram_file, "Gram file")->required();
  e->add_option("--bound", en.bound, "norm bound")->required();
  e->add_flag("--characteristic", en.characteristic, "enumerate the characteristic coset");
  e->add_option("--budget", en.budget, "enumeration node budget");
  e->add_option("--out", en.out, "output file (default stdout)");

  std::string cat_name, cat_out;
  auto* c = app.add_subcommand("catalog", "write a reference Gram matrix (I4, D8, E8, Gamma12, Gamma8+I4, D8^2[(12)], ...)");
  c->add_option("name", cat_name, "lattice name")->required();
  c->add_option("--out", cat_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? ok : io_error;
  }

  if (*b) {
    if (build.a.empty() && !build.k) throw InputError("build needs --a or --k");
    return cmd_build(build);
  }
  if (*t) return cmd_transfer(tr);
  if (*z) return cmd_analyze(an);
  if (*vp) return cmd_verify(ver);
  if (*e) return cmd_enumerate(en);
  return cmd_catalog(cat_name, cat_out);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "hlat: " << e.what() << '\n';
    return io_error;
  } catch (const DomainError& e) {
    std::cerr << "hlat: " << e.what() << '\n';
    return domain_error;
  } catch (const OverflowError& e) {
    std::cerr << "hlat: " << e.what() << '\n';
    return domain_error;
  } catch (const BudgetExceeded& e) {
    std::cerr << "hlat: " << e.what() << '\n';
    return budget_exhausted;
  } catch (const std::exception& e) {
    std::cerr << "hlat: internal error: " << e.what() << '\n';
    return verification_failed;
  }
}
