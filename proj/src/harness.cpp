#include "hh/harness.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "hh/zoo.hpp"

namespace hh {

using ojson = nlohmann::ordered_json;

LoadError::LoadError(std::string where_, const std::string& what)
    : std::runtime_error(where_ + ": " + what), where(std::move(where_)) {}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

nlohmann::json parse_json(const std::string& text, const std::string& source) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError(source + ":" + std::to_string(line_of(text, e.byte)), e.what());
  }
}

FieldSpec field_of(const nlohmann::json& j, const std::string& source) {
  auto where = source + ": field \"field\"";
  if (!j.contains("field") || !j["field"].is_object()) throw LoadError(where, "missing or not an object");
  const auto& f = j["field"];
  if (!f.contains("kind") || !f["kind"].is_string()) throw LoadError(where, "missing \"kind\"");
  const auto kind = f["kind"].get<std::string>();
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "Fp") {
    if (!f.contains("p") || !f["p"].is_number_unsigned()) throw LoadError(where, "missing prime \"p\"");
    const auto p = f["p"].get<std::uint64_t>();
    if (p > 0xffffffffULL || !is_prime(p)) throw LoadError(where, std::to_string(p) + " is not a prime");
    return FieldSpec::prime_field(static_cast<std::uint32_t>(p));
  }
  throw LoadError(where, "unknown kind \"" + kind + "\"");
}

template <class K>
K coefficient(const nlohmann::json& v, const FieldSpec& f, const std::string& where) {
  try {
    if (v.is_string()) return K::parse(f, v.get<std::string>());
    if (v.is_number_integer()) return K::from_int(f, v.get<long long>());
  } catch (const FieldError& e) {
    throw LoadError(where, e.what());
  }
  throw LoadError(where, "coefficient must be a decimal string or an integer");
}

}  // namespace

FieldSpec resolve_field(const std::string& spec, const std::optional<FieldSpec>& flag) {
  if (!spec.starts_with("file:")) return flag.value_or(FieldSpec::rationals());
  const auto path = spec.substr(5);
  const auto text = read_file(path);
  const auto f = field_of(parse_json(text, path), path);
  if (flag && !(*flag == f))
    throw LoadError(path, "file is over " + f.name() + " but --field asks for " + flag->name());
  return f;
}

template <class K>
Algebra<K> parse_algebra_json(const std::string& text, const std::string& source) {
  const auto j = parse_json(text, source);
  if (!j.is_object()) throw LoadError(source, "top level must be an object");
  const FieldSpec f = field_of(j, source);
  if (!field_matches<K>(f)) throw LoadError(source + ": field \"field\"", "does not match the requested field");
  auto field_err = [&](const std::string& name) { return source + ": field \"" + name + "\""; };
  if (!j.contains("dim") || !j["dim"].is_number_unsigned()) throw LoadError(field_err("dim"), "missing or not a natural number");
  const auto d = j["dim"].get<std::size_t>();
  if (d == 0 || d > 4096) throw LoadError(field_err("dim"), "must be between 1 and 4096");
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    if (!j["basis"].is_array() || j["basis"].size() != d) throw LoadError(field_err("basis"), "must list dim labels");
    for (std::size_t i = 0; i < d; ++i) {
      if (!j["basis"][i].is_string()) throw LoadError(field_err("basis[" + std::to_string(i) + "]"), "not a string");
      labels.push_back(j["basis"][i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < d; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (!j.contains("unit") || !j["unit"].is_array() || j["unit"].size() != d)
    throw LoadError(field_err("unit"), "must be a list of dim coefficients");
  std::vector<K> unit;
  for (std::size_t i = 0; i < d; ++i) unit.push_back(coefficient<K>(j["unit"][i], f, field_err("unit[" + std::to_string(i) + "]")));
  if (!j.contains("mul") || !j["mul"].is_array()) throw LoadError(field_err("mul"), "missing or not a list");
  std::vector<StructureConstant<K>> mul;
  for (std::size_t r = 0; r < j["mul"].size(); ++r) {
    const auto& e = j["mul"][r];
    const auto where = field_err("mul[" + std::to_string(r) + "]");
    if (!e.is_array() || e.size() != 4) throw LoadError(where, "entries are [i, j, k, coeff]");
    std::uint32_t idx[3];
    for (int c = 0; c < 3; ++c) {
      if (!e[c].is_number_unsigned() || e[c].get<std::size_t>() >= d)
        throw LoadError(where, "index " + std::to_string(c) + " must be in 0.." + std::to_string(d - 1));
      idx[c] = e[c].get<std::uint32_t>();
    }
    mul.push_back({idx[0], idx[1], idx[2], coefficient<K>(e[3], f, where)});
  }
  std::string name = source;
  if (j.contains("name") && j["name"].is_string()) name = j["name"].get<std::string>();
  return Algebra<K>::make(f, std::move(labels), mul, std::move(unit), name);
}

template <class K>
Algebra<K> load_algebra(const std::string& spec, const FieldSpec& field) {
  if (spec.starts_with("file:")) {
    const auto path = spec.substr(5);
    return parse_algebra_json<K>(read_file(path), path);
  }
  return zoo<K>(spec, field);
}

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v{"thm1.1", "thm1.3", "thm2.2", "lem2.3", "cor2.5", "thm2.7", "prop3.1", "thm3.2",
                               "prop3.4", "cor3.5", "rmk3.6", "thm3.8", "prop3.9", "thm3.10", "thm3.15", "ex3.16"};
    std::sort(v.begin(), v.end());
    return v;
  }();
  return ids;
}

std::vector<std::string> parse_check_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    if (item == "all") {
      out.insert(out.end(), all_check_ids().begin(), all_check_ids().end());
      continue;
    }
    const auto& ids = all_check_ids();
    if (std::find(ids.begin(), ids.end(), item) == ids.end()) throw UsageError("unknown check id: " + item);
    out.push_back(item);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

CheckResult skipped(const std::string& id, const std::string& reason) {
  CheckResult r{id};
  r.status = Status::Skipped;
  r.note(reason);
  return r;
}

template <class K>
struct Context {
  Algebra<K> a;
  std::string algebra_id;
  RunOptions opt;
  std::optional<FrobeniusData<K>> fd;
  std::string no_form, no_order, no_grading;

  void setup_frobenius() {
    try {
      fd = find_frobenius(a, 32, opt.seed);
    } catch (const Inconclusive& e) {
      no_form = "Inconclusive: no Frobenius form among " + std::to_string(e.log.size()) + " candidates";
      no_order = no_grading = no_form;
      return;
    }
    if (!fd->ord) {
      no_order = no_grading = std::string("InfiniteOrder: ") + InfiniteOrder(fd->ord_bound).what();
      return;
    }
    const FieldSpec& f = a.field();
    try {
      if (opt.root) {
        set_grading(*fd, K::parse(f, *opt.root));
      } else if (!try_default_grading(*fd)) {
        const auto ch = f.characteristic();
        no_grading = ch != 0 && *fd->ord % ch == 0
                         ? "hypothesis violated: char " + std::to_string(ch) + " divides ord(rho) = " + std::to_string(*fd->ord)
                         : "NoPrimitiveRoot: no primitive " + std::to_string(*fd->ord) + "-th root of unity in " + f.name();
      }
    } catch (const NotPrimitiveRoot& e) {
      no_grading = std::string("NotPrimitiveRoot: ") + e.what();
    } catch (const NotDiagonalizable& e) {
      no_grading = std::string("NotDiagonalizable: ") + e.what();
    } catch (const FieldError& e) {
      no_grading = std::string("bad --root: ") + e.what();
    }
  }

  CheckResult run(const std::string& id) {
    const std::size_t n = opt.n_max;
    const Limits& lim = opt.limits;
    auto s = [&] { return trivial_split(a); };
    if (id == "thm1.1") return verify_theorem_1_1(s(), n, lim);
    if (id == "thm1.3") return column_ext_check(s(), 2, n, lim);
    if (id == "thm2.2") return verify_sigma_homotopy(a, n, lim);
    if (id == "lem2.3") return verify_lemma_2_3(a, n + 1, lim);
    if (id == "cor2.5") return verify_corollary_2_x(a, n, lim);
    if (id == "thm2.7") return verify_degree_zero_one(a, lim);
    if (!fd) return skipped(id, no_form);
    if (id == "prop3.1") {
      auto r = chain_maps_check(*fd, 2, std::min<std::size_t>(n, 2));
      r.note("p <= 2, n <= " + std::to_string(std::min<std::size_t>(n, 2)));
      return r;
    }
    if (id == "thm3.2") return verify_theorem_3_2(*fd, std::min<std::size_t>(3, n + 1), n, lim);
    if (id == "prop3.4") return verify_proposition_3_4(*fd, n, lim);
    if (id == "cor3.5") return verify_corollary_3_5(*fd, n, lim);
    if (id == "rmk3.6") return verify_remark_3_6(*fd, n, lim);
    if (!fd->ord) return skipped(id, no_order);
    if (id == "thm3.8") return verify_theorem_3_8(*fd, n, lim);
    if (id == "ex3.16") {
      std::uint32_t N;
      K w;
      if (!parse_taft(algebra_id, a.field(), N, w)) return skipped(id, "applies to Taft algebras only");
      return taft_invariants_check(*fd, N, w, n, lim);
    }
    if (!fd->graded()) return skipped(id, no_grading);
    if (id == "prop3.9") return verify_proposition_3_9(*fd, 3, n, lim);
    if (id == "thm3.10") return verify_theorem_3_10(*fd, n, lim);
    if (id == "thm3.15") return verify_theorem_3_15(*fd, n, lim);
    throw UsageError("unknown check id: " + id);
  }
};

// A check run on a deliberately corrupted differential; always fails.
template <class K>
CheckResult corrupted_check(const Algebra<K>& a) {
  CheckResult r{"selftest.corruption"};
  auto c = hochschild_cochain(a, Bimodule<K>::regular(a), 2);
  auto& d = c.d_mut(0);
  d = d + SparseMatrix<K>::from_triplets(d.rows(), d.cols(), {{0, 0, a.one()}});
  r.identity("d d = 0 on the corrupted Hochschild complex", {c.composes_to_zero()});
  r.note("test mode: one entry of b^0 was changed");
  return r.finish();
}

}  // namespace

template <class K>
VerificationReport run_checks(const Algebra<K>& a, const std::string& algebra_id, const std::vector<std::string>& ids,
                              const RunOptions& opt) {
  VerificationReport rep{algebra_id, a.field().name(), opt.n_max, {}};
  Context<K> ctx{a, algebra_id, opt, std::nullopt, {}, {}, {}};
  static const std::vector<std::string> needs_form{"prop3.1", "thm3.2", "prop3.4", "cor3.5", "rmk3.6",
                                                   "thm3.8",  "prop3.9", "thm3.10", "thm3.15", "ex3.16"};
  if (std::any_of(ids.begin(), ids.end(), [&](const std::string& id) {
        return std::find(needs_form.begin(), needs_form.end(), id) != needs_form.end();
      }))
    ctx.setup_frobenius();
  auto sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& id : sorted) {
    try {
      rep.checks.push_back(ctx.run(id));
    } catch (const SizeLimitExceeded& e) {
      rep.checks.push_back(skipped(id, std::string("size limit: ") + e.what()));
    } catch (const InfiniteOrder& e) {
      rep.checks.push_back(skipped(id, std::string("InfiniteOrder: ") + e.what()));
    } catch (const GradingMissing& e) {
      rep.checks.push_back(skipped(id, e.what()));
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      CheckResult r{id};
      r.status = Status::Fail;
      r.note(std::string("error: ") + e.what());
      rep.checks.push_back(std::move(r));
    }
  }
  if (opt.inject_corruption) rep.checks.push_back(corrupted_check(a));
  return rep;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

std::string emit_table(const VerificationReport& r) {
  std::ostringstream out;
  out << "algebra " << r.algebra << "  field " << r.field << "  n_max " << r.n_max << "\n";
  std::size_t w = 0;
  for (auto& c : r.checks) w = std::max(w, c.id.size());
  for (auto& c : r.checks) {
    out << c.id << std::string(w - c.id.size() + 2, ' ') << status_name(c.status) << "\n";
    for (auto& cmp : c.comparisons) {
      out << "    " << (cmp.holds() ? "ok   " : "FAIL ") << cmp.what << "\n";
      const std::size_t lw = std::max(cmp.lhs.label.size(), cmp.rhs.label.size());
      for (const DimTable* t : {&cmp.lhs, &cmp.rhs})
        out << "           " << t->label << std::string(lw - t->label.size(), ' ') << " : " << join(t->dims) << "\n";
    }
    for (auto& n : c.notes) out << "    note: " << n << "\n";
  }
  return out.str();
}

namespace {

ojson table_json(const DimTable& t) {
  ojson j;
  j["label"] = t.label;
  j["dims"] = t.dims;
  return j;
}

DimTable table_from(const nlohmann::json& j) { return {j.at("label").get<std::string>(), j.at("dims").get<std::vector<std::size_t>>()}; }

}  // namespace

std::string emit_json(const VerificationReport& r) {
  ojson j;
  j["algebra"] = r.algebra;
  j["field"] = r.field;
  j["n_max"] = r.n_max;
  j["checks"] = ojson::array();
  for (auto& c : r.checks) {
    ojson cj;
    cj["id"] = c.id;
    cj["status"] = status_name(c.status);
    cj["comparisons"] = ojson::array();
    for (auto& cmp : c.comparisons) {
      ojson k;
      k["what"] = cmp.what;
      k["holds"] = cmp.holds();
      k["lhs"] = table_json(cmp.lhs);
      k["rhs"] = table_json(cmp.rhs);
      cj["comparisons"].push_back(std::move(k));
    }
    cj["notes"] = c.notes;
    j["checks"].push_back(std::move(cj));
  }
  return j.dump(2) + "\n";
}

VerificationReport parse_report_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  VerificationReport r;
  r.algebra = j.at("algebra").get<std::string>();
  r.field = j.at("field").get<std::string>();
  r.n_max = j.at("n_max").get<std::size_t>();
  for (auto& cj : j.at("checks")) {
    CheckResult c{cj.at("id").get<std::string>()};
    c.status = parse_status(cj.at("status").get<std::string>());
    for (auto& k : cj.at("comparisons"))
      c.comparisons.push_back({k.at("what").get<std::string>(), table_from(k.at("lhs")), table_from(k.at("rhs"))});
    c.notes = cj.at("notes").get<std::vector<std::string>>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

int exit_code(const VerificationReport& r) {
  return std::any_of(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.status == Status::Fail; })
             ? 1
             : 0;
}

#define HH_INSTANTIATE(K)                                                                  \
  template Algebra<K> load_algebra(const std::string&, const FieldSpec&);                  \
  template Algebra<K> parse_algebra_json(const std::string&, const std::string&);          \
  template VerificationReport run_checks(const Algebra<K>&, const std::string&,            \
                                         const std::vector<std::string>&, const RunOptions&);

HH_INSTANTIATE(Fp)
HH_INSTANTIATE(Rational)

}  // namespace hh
