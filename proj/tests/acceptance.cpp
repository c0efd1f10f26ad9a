// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.
// Usage: hh_acceptance <path to hh> [criterion ...]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "hh/harness.hpp"
#include "hh/split_complex.hpp"
#include "hh/zoo.hpp"

using namespace hh;

namespace {

struct Member {
  std::string name;
  FieldSpec field;
  std::optional<std::string> root;
};

const std::vector<Member>& members() {
  static const std::vector<Member> z = {
      {"dual-numbers", FieldSpec::rationals(), {}}, {"trunc:3", FieldSpec::rationals(), {}},
      {"cyclic:2", FieldSpec::rationals(), {}},     {"cyclic:3", FieldSpec::rationals(), {}},
      {"mat:2", FieldSpec::rationals(), {}},        {"taft:2", FieldSpec::prime_field(5), "4"},
      {"taft:3", FieldSpec::prime_field(7), "2"},
  };
  return z;
}

const Member& member(const std::string& name) {
  for (auto& m : members())
    if (m.name == name) return m;
  throw std::logic_error("not in the zoo: " + name);
}

// Collects sub-results of one criterion.
struct Tally {
  std::vector<std::string> failed;
  std::vector<std::string> info;
  std::size_t items = 0;

  void item(bool ok, const std::string& what) {
    ++items;
    if (!ok) failed.push_back(what);
  }
  void check(const CheckResult& r, const std::string& where) {
    std::string why;
    if (r.status != Status::Pass) {
      why = std::string(status_name(r.status));
      for (auto& c : r.comparisons)
        if (!c.holds()) {
          why += "; " + c.what;
          break;
        }
      for (auto& n : r.notes)
        if (n.find("skipped") != std::string::npos || n.find("not exact") != std::string::npos ||
            n.find("error") != std::string::npos) {
          why += "; " + n;
          break;
        }
    }
    item(r.status == Status::Pass, where + " " + r.id + (why.empty() ? "" : " (" + why + ")"));
  }
};

template <class F>
void with_member(const Member& m, F&& f) {
  dispatch_field(m.field, [&]<class K>() {
    auto a = zoo<K>(m.name, m.field);
    f.template operator()<K>(a);
  });
}

template <class K>
FrobeniusData<K> graded_frobenius(const Algebra<K>& a, const Member& m) {
  auto fd = find_frobenius(a);
  if (m.root)
    set_grading(fd, K::parse(a.field(), *m.root));
  else
    try_default_grading(fd);
  return fd;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed1(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

// Runs `body` on a member; a size-limit or other exception is a failed item.
template <class F>
void guarded(Tally& t, const std::string& where, F&& body) {
  try {
    body();
  } catch (const SizeLimitExceeded& e) {
    t.item(false, where + " incomplete: " + e.what());
  } catch (const std::exception& e) {
    t.item(false, where + " error: " + e.what());
  }
}

void criterion_1(Tally& t) {
  for (auto& m : members()) {
    const auto t0 = std::chrono::steady_clock::now();
    with_member(m, [&]<class K>(const Algebra<K>& a) {
      guarded(t, m.name + " bar", [&] { t.item(hochschild_cochain(a, Bimodule<K>::regular(a), 4).composes_to_zero(),
                                               m.name + " bar"); });
      auto s = trivial_split(a);
      for (long p = 0; p <= 4; ++p)
        guarded(t, m.name + " X_(" + std::to_string(p) + ")", [&] {
          t.item(build_X(s, p, 4).composes_to_zero(), m.name + " X_(" + std::to_string(p) + ")");
        });
      for (std::size_t p = 1; p <= 2; ++p)
        guarded(t, m.name + " resolution p=" + std::to_string(p), [&] {
          t.item(build_resolution(s, p, 4).composes_to_zero(), m.name + " resolution p=" + std::to_string(p));
        });
      auto fd = find_frobenius(a);
      for (std::size_t p = 1; p <= 3; ++p)
        guarded(t, m.name + " Y_(" + std::to_string(p) + ")", [&] {
          auto y = build_Y(fd, p, 4);
          t.item(y.column.composes_to_zero() && y.total.composes_to_zero(), m.name + " Y_(" + std::to_string(p) + ")");
        });
    });
    t.info.push_back(m.name + " " + fixed1(seconds_since(t0)));
  }
}

void criterion_2(Tally& t) {
  for (auto& m : members())
    with_member(m, [&]<class K>(const Algebra<K>& a) {
      if (a.dim() > 4) return;
      guarded(t, m.name, [&] { t.check(verify_theorem_1_1(trivial_split(a), a.dim() == 2 ? 4 : 3), m.name); });
    });
}

void criterion_3(Tally& t) {
  for (auto& m : members()) {
    const auto t0 = std::chrono::steady_clock::now();
    with_member(m, [&]<class K>(const Algebra<K>& a) {
      guarded(t, m.name, [&] { t.check(column_ext_check(trivial_split(a), 2, 3), m.name); });
    });
    t.info.push_back(m.name + " " + fixed1(seconds_since(t0)));
  }
}

void criterion_4(Tally& t) {
  for (const char* name : {"dual-numbers", "cyclic:2", "trunc:3"})
    with_member(member(name), [&]<class K>(const Algebra<K>& a) {
      guarded(t, name, [&] { t.check(verify_sigma_homotopy(a, 3), name); });
    });
}

void criterion_5(Tally& t) {
  for (auto& m : members())
    with_member(m, [&]<class K>(const Algebra<K>& a) {
      guarded(t, m.name, [&] {
        t.check(verify_lemma_2_3(a, 4), m.name);
        auto fd = find_frobenius(a);
        for (std::size_t p = 2; p <= 4; ++p)
          t.item(cyc_dims(a, p) == remark_cyc_dim(fd, p - 1),
                 m.name + " Cyc^" + std::to_string(p) + " linear-system route");
      });
    });
}

void criterion_6(Tally& t) {
  for (auto& m : members()) {
    const auto t0 = std::chrono::steady_clock::now();
    with_member(m, [&]<class K>(const Algebra<K>& a) {
      guarded(t, m.name, [&] {
        auto fd = find_frobenius(a);
        t.check(verify_theorem_3_2(fd, 3, 3), m.name);
        t.check(verify_proposition_3_4(fd, 4), m.name);
      });
    });
    t.info.push_back(m.name + " " + fixed1(seconds_since(t0)));
  }
}

void criterion_7(Tally& t) {
  for (const char* name : {"taft:2", "taft:3"})
    with_member(member(name), [&]<class K>(const Algebra<K>& a) {
      guarded(t, name, [&] { t.check(verify_proposition_3_9(graded_frobenius(a, member(name)), 3, 3), name); });
    });
}

void criterion_8(Tally& t) {
  for (auto [name, n] : {std::pair{"taft:2", 3}, {"dual-numbers", 4}, {"cyclic:2", 4}}) {
    const auto t0 = std::chrono::steady_clock::now();
    with_member(member(name), [&]<class K>(const Algebra<K>& a) {
      guarded(t, name, [&] {
        auto fd = graded_frobenius(a, member(name));
        t.check(verify_theorem_3_8(fd, n), name);
        t.check(verify_theorem_3_10(fd, n), name);
      });
    });
    t.info.push_back(std::string(name) + " " + fixed1(seconds_since(t0)));
  }
}

void criterion_9(Tally& t) {
  for (const char* name : {"taft:2", "taft:3"})
    with_member(member(name), [&]<class K>(const Algebra<K>& a) {
      guarded(t, name, [&] { t.check(verify_theorem_3_15(graded_frobenius(a, member(name)), 3), name); });
    });
}

void criterion_10(Tally& t) {
  for (const char* name : {"taft:2", "taft:3"}) {
    const Member& m = member(name);
    dispatch_field(m.field, [&]<class K>() {
      if constexpr (std::is_same_v<K, Fp>) {
        guarded(t, name, [&] {
          std::uint32_t n = 0;
          Fp w;
          if (!parse_taft(name, m.field, n, w)) throw std::logic_error("not a Taft algebra");
          auto a = zoo<Fp>(name, m.field);
          auto r = taft_invariants_check(find_frobenius(a), n, w, 2);
          t.check(r, name);
          for (auto& c : r.comparisons)
            if (!c.holds()) t.info.push_back(std::string(name) + ": " + c.what);
        });
      }
    });
  }
}

void criterion_11(Tally& t) {
  for (const char* name : {"cyclic:2", "dual-numbers"})
    with_member(member(name), [&]<class K>(const Algebra<K>& a) {
      guarded(t, name, [&] {
        auto r = chain_maps_check(find_frobenius(a), 2, 2);
        t.check(r, name);
        for (auto& n : r.notes)
          if (n.find("Psi") != std::string::npos) t.info.push_back(std::string(name) + ": " + n);
      });
    });
}

void criterion_12(Tally& t) {
  for (const char* name : {"cyclic:2", "cyclic:3"})
    with_member(member(name), [&]<class K>(const Algebra<K>& a) {
      guarded(t, name, [&] {
        auto s = trivial_split(a);
        auto got = hh_dims(s.e, Bimodule<K>::regular(s.e), 3).dims;
        const std::size_t d = a.dim();
        t.item(got == std::vector<std::size_t>{2 * d, d, d, d}, std::string(name) + " HH(TA)");
      });
    });
}

int run_hh(const std::string& hh, const std::string& args) {
  const std::string cmd = "\"" + hh + "\" " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return rc != -1 && WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void criterion_13(Tally& t, const std::string& hh) {
  const auto dir = std::filesystem::temp_directory_path() / "hh_acceptance";
  std::filesystem::create_directories(dir);
  const auto json = (dir / "cyclic2.json").string();
  t.item(run_hh(hh, "verify --algebra cyclic:2 --checks all --nmax 3 --json \"" + json + "\"") == 0,
         "verify --checks all on cyclic:2 exits 0");
  t.item(run_hh(hh, "verify --algebra cyclic:2 --checks thm1.1 --nmax 2 --inject-corruption") == 1,
         "injected corruption exits 1");
  guarded(t, "JSON round trip", [&] {
    std::ifstream in(json, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    auto rep = parse_report_json(text);
    t.item(emit_json(rep) == text, "JSON re-emits byte for byte");
    t.item(rep.checks.size() == all_check_ids().size(), "JSON lists every check");
    RunOptions opt;
    opt.n_max = 3;
    auto direct = run_checks(zoo<Rational>("cyclic:2", FieldSpec::rationals()), "cyclic:2", all_check_ids(), opt);
    t.item(rep == direct, "JSON equals the in-process report");
  });
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: hh_acceptance <hh binary> [criterion ...]\n";
    return 2;
  }
  const std::string hh = argv[1];
  std::set<int> only;
  for (int i = 2; i < argc; ++i) only.insert(std::atoi(argv[i]));

  const std::vector<std::function<void(Tally&)>> criteria = {
      criterion_1, criterion_2, criterion_3,  criterion_4,  criterion_5,  criterion_6,
      criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12,
      [&](Tally& t) { criterion_13(t, hh); },
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Tally t;
    const auto t0 = std::chrono::steady_clock::now();
    criteria[i](t);
    const bool ok = t.failed.empty() && t.items > 0;
    failures += !ok;
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << t.items - t.failed.size() << "/"
              << t.items << " items, " << fixed1(seconds_since(t0));
    if (!t.info.empty()) {
      std::cout << "  [";
      for (std::size_t k = 0; k < t.info.size(); ++k) std::cout << (k ? "; " : "") << t.info[k];
      std::cout << "]";
    }
    std::cout << "\n";
    for (auto& f : t.failed) std::cout << "    failed: " << f << "\n";
    std::cout.flush();
  }
  return failures == 0 ? 0 : 1;
}
