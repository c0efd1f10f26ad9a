// hh: Hochschild cohomology tables, Frobenius data and verification reports.
#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hh/harness.hpp"
#include "hh/zoo.hpp"

using namespace hh;

namespace {

struct Common {
  std::string algebra;
  std::string field;
  std::size_t n_max = 3;
  std::uint64_t seed = 1;
  std::optional<std::string> root;
  std::string size_limit;
};

Limits limits_from(const std::string& text) {
  Limits l;
  if (text.empty()) return l;
  double v = 0;
  try {
    v = std::stod(text);
  } catch (const std::exception&) {
    throw UsageError("bad --size-limit: " + text);
  }
  if (!(v >= 1) || v > 1e12) throw UsageError("bad --size-limit: " + text);
  l.max_space_dim = static_cast<std::size_t>(std::llround(v));
  return l;
}

FieldSpec field_for(const Common& c) {
  std::optional<FieldSpec> flag;
  if (!c.field.empty()) flag = parse_field(c.field);
  return resolve_field(c.algebra, flag);
}

template <class K>
int cmd_table(const Common& c, const std::string& coefficients, const FieldSpec& f) {
  auto a = load_algebra<K>(c.algebra, f);
  const Limits lim = limits_from(c.size_limit);
  auto m = coefficients == "dual" ? dual_bimodule(a) : Bimodule<K>::regular(a);
  auto hh = hh_dims(a, m, c.n_max, lim);
  auto hom = hochschild_homology_dims(a, c.n_max, lim);
  std::cout << "algebra " << c.algebra << "  field " << f.name() << "  dim " << a.dim() << "\n";
  std::cout << "n";
  for (std::size_t n = 0; n <= c.n_max; ++n) std::cout << "\t" << n;
  std::cout << "\nHH^n(A," << (coefficients == "dual" ? "DA" : "A") << ")";
  for (auto v : hh.dims) std::cout << "\t" << v;
  std::cout << "\nHH_n(A)";
  for (auto v : hom.dims) std::cout << "\t" << v;
  std::cout << "\n";
  return 0;
}

template <class K>
int cmd_frobenius(const Common& c, const FieldSpec& f) {
  auto a = load_algebra<K>(c.algebra, f);
  auto fd = find_frobenius(a, 32, c.seed);
  std::cout << "algebra " << c.algebra << "  field " << f.name() << "  dim " << a.dim() << "\n";
  std::cout << "form: " << fd.origin << "\nphi:";
  for (auto& v : fd.phi) std::cout << " " << v.to_string();
  std::cout << "\nnakayama relation: " << (nakayama_relation_holds(fd) ? "holds" : "FAILS") << "\nrho:\n";
  for (std::size_t j = 0; j < a.dim(); ++j) {
    std::cout << "  " << a.labels()[j] << " ->";
    auto img = fd.rho.image(j);
    bool any = false;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!img[i].is_zero()) {
        std::cout << (any ? " + " : " ") << img[i].to_string() << "*" << a.labels()[i];
        any = true;
      }
    std::cout << (any ? "" : " 0") << "\n";
  }
  if (!fd.ord) {
    std::cout << "ord: none <= " << fd.ord_bound << "\n";
    return 0;
  }
  std::cout << "ord: " << *fd.ord << "\ne_A: " << fd.e_A << "\n";
  try {
    bool graded = c.root ? (set_grading(fd, K::parse(f, *c.root)), true) : try_default_grading(fd);
    if (!graded) {
      std::cout << "grading: no primitive " << *fd.ord << "-th root of unity usable over " << f.name() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cout << "grading: " << e.what() << "\n";
    return 0;
  }
  std::cout << "w: " << fd.w->to_string() << "\ngrading dims:";
  for (auto& g : fd.grading) std::cout << " " << g.size();
  std::cout << "\n";
  return 0;
}

template <class K>
int cmd_verify(const Common& c, const std::string& checks, const std::string& json_path, bool corrupt,
               const FieldSpec& f) {
  RunOptions opt;
  opt.n_max = c.n_max;
  opt.root = c.root;
  opt.seed = c.seed;
  opt.limits = limits_from(c.size_limit);
  opt.inject_corruption = corrupt;
  const auto ids = parse_check_list(checks);
  VerificationReport rep;
  try {
    auto a = load_algebra<K>(c.algebra, f);
    rep = run_checks(a, c.algebra, ids, opt);
  } catch (const NoPrimitiveRoot& e) {
    // The algebra itself needs a root of unity the field lacks.
    rep = {c.algebra, f.name(), c.n_max, {}};
    for (auto& id : ids) {
      CheckResult r{id};
      r.status = Status::Skipped;
      r.note(std::string("NoPrimitiveRoot: ") + e.what());
      rep.checks.push_back(std::move(r));
    }
  }
  std::cout << emit_table(rep);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + json_path);
    out << emit_json(rep);
  }
  return exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology of finite-dimensional algebras and trivial extensions"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", c.algebra, "zoo name or file:<path>")->required();
    sub->add_option("--field", c.field, "q or fp:P (zoo algebras; files carry their field)");
    sub->add_option("--seed", c.seed, "seed for the Frobenius form search");
    sub->add_option("--size-limit", c.size_limit, "largest cochain space dimension to build (e.g. 5e6)");
  };
  std::string coefficients = "self", checks, json_path;
  bool corrupt = false;

  auto* table = app.add_subcommand("table", "HH^n(A, M) and HH_n(A) dimensions");
  add_common(table);
  table->add_option("--nmax", c.n_max, "largest degree")->required();
  table->add_option("--coefficients", coefficients, "self or dual")->check(CLI::IsMember({"self", "dual"}));

  auto* frob = app.add_subcommand("frobenius", "Frobenius form, Nakayama automorphism, order and grading");
  add_common(frob);
  frob->add_option("--root", c.root, "root of unity for the grading");

  auto* verify = app.add_subcommand("verify", "run verification checks and report");
  add_common(verify);
  verify->add_option("--checks", checks, "comma-separated check ids or all")->required();
  verify->add_option("--nmax", c.n_max, "largest degree")->required();
  verify->add_option("--root", c.root, "root of unity for the grading");
  verify->add_option("--json", json_path, "also write the report as JSON");
  verify->add_flag("--inject-corruption", corrupt)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const FieldSpec f = field_for(c);
    return dispatch_field(f, [&]<class K>() -> int {
      if (*table) return cmd_table<K>(c, coefficients, f);
      if (*frob) return cmd_frobenius<K>(c, f);
      return cmd_verify<K>(c, checks, json_path, corrupt, f);
    });
  } catch (const LoadError& e) {
    std::cerr << "load error: " << e.what() << "\n";
  } catch (const AlgebraError& e) {
    std::cerr << "invalid algebra: " << e.what() << "\n";
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
  } catch (const FieldError& e) {
    std::cerr << "field: " << e.what() << "\n";
  } catch (const SizeLimitExceeded& e) {
    std::cerr << "size limit: " << e.what() << "\n";
  } catch (const Inconclusive& e) {
    std::cerr << e.what() << "\n";
  }
  return 2;
}
