#include "hessbasis/report.hpp"

#include <chrono>
#include <ostream>

#include "hessbasis/error.hpp"
#include "hessbasis/fixtures.hpp"
#include "hessbasis/parallel.hpp"

namespace hessbasis {

namespace {

constexpr const char* kPublished = "published-table";
constexpr const char* kOracle = "derived-oracle";
constexpr const char* kTrivial = "trivial";

constexpr std::uint64_t kQuickBound = 1000000;
constexpr std::uint64_t kLongBound = 10000000;

class Checker {
public:
    explicit Checker(std::string profile) { report_.profile = std::move(profile); }

    template <typename Fn>
    void run(const std::string& name, const std::string& provenance, Fn fn) {
        CheckResult r;
        r.name = name;
        r.provenance = provenance;
        const auto start = std::chrono::steady_clock::now();
        try {
            auto [expected, computed] = fn();
            r.expected = expected;
            r.computed = computed;
            r.status = expected == computed ? CheckStatus::Pass : CheckStatus::Fail;
        } catch (const std::exception& e) {
            r.status = CheckStatus::Fail;
            r.computed = std::string("error: ") + e.what();
        }
        r.millis = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
        report_.checks.push_back(std::move(r));
    }

    void skip(const std::string& name, const std::string& why) {
        CheckResult r;
        r.name = name;
        r.status = CheckStatus::Skipped;
        r.computed = why;
        report_.checks.push_back(std::move(r));
    }

    RunReport take() { return std::move(report_); }

private:
    RunReport report_;
};

using Expect = std::pair<std::string, std::string>;

std::string certified_summary(const std::vector<Certificate>& certs) {
    size_t ok = 0;
    for (const auto& c : certs) ok += c.certified ? 1 : 0;
    return std::to_string(ok) + "/" + std::to_string(certs.size()) + " certified";
}

// Enumerates candidates from the given ratio and certifies every set at the
// group's default regular vector.
Expect enumerate_and_certify(const GroupSpec& spec, const RatioPolynomial& ratio,
                             bool require_all_singles, size_t expected_count) {
    ReflectionGroup group = ReflectionGroup::build(spec);
    const auto invs = basic_invariants(group);
    const auto v = default_regular_vector(group, invs);
    const auto sets =
        enumerate_candidate_sets(spec.degrees(), ratio, require_all_singles);
    std::vector<Certificate> certs(sets.size());
    parallel_for(sets.size(), [&](size_t i) {
        certs[i] = certify(spec, sets[i], invs, v);
    });
    return {std::to_string(expected_count) + " sets, all certified",
            std::to_string(sets.size()) + " sets, " + certified_summary(certs)};
}

void dihedral_checks(Checker& c) {
    for (unsigned n = 2; n <= 12; ++n) {
        c.run("I2(" + std::to_string(n) + ") census ratio", kPublished, [n]() -> Expect {
            ReflectionGroup group = ReflectionGroup::build(GroupSpec::I2(n));
            const auto ratio = census_ratio(group, kQuickBound);
            return {closed_form_ratio(GroupType::I2, n).poly.str(), ratio.poly.str()};
        });
    }
    c.run("dihedral direct summation equals census route (n=2..12)", kOracle,
          []() -> Expect {
              for (unsigned n = 2; n <= 12; ++n) {
                  ReflectionGroup group = ReflectionGroup::build(GroupSpec::I2(n));
                  const unsigned order = default_truncation(group.spec().degrees());
                  const auto direct =
                      molien_dihedral_direct(n, MolienCharacter::Sym2, order);
                  const auto census = molien_series(group.census(kQuickBound),
                                                    MolienCharacter::Sym2, order);
                  if (!(direct == census))
                      return {"all equal", "mismatch at n=" + std::to_string(n)};
              }
              return {"all equal", "all equal"};
          });
}

void classical_checks(Checker& c, bool full) {
    struct Row {
        GroupType type;
        unsigned n;
    };
    std::vector<Row> rows = {{GroupType::A, 2}, {GroupType::A, 3}, {GroupType::A, 4},
                             {GroupType::B, 2}, {GroupType::B, 3}, {GroupType::D, 3},
                             {GroupType::D, 4}};
    if (full) {
        rows.push_back({GroupType::A, 5});
        rows.push_back({GroupType::A, 6});
        rows.push_back({GroupType::B, 4});
    }
    for (auto [type, n] : rows) {
        const std::string name = type_name(type) + ":" + std::to_string(n);
        c.run(name + " ratio route agreement", kOracle, [type = type, n = n]() -> Expect {
            const GroupSpec spec = GroupSpec::classical(type, n);
            ReflectionGroup group = ReflectionGroup::build(spec);
            const unsigned order = default_truncation(spec.degrees());
            const auto closed = closed_form_ratio(type, n);
            const auto cycle = ratio_polynomial(
                cycle_index_molien(type, n, MolienCharacter::Sym2, order),
                spec.degrees());
            const auto census = census_ratio(group, kQuickBound);
            std::string expected = closed.poly.str();
            if (!(cycle.poly == closed.poly))
                return {expected, "cycle-index: " + cycle.poly.str()};
            return {expected, census.poly.str()};
        });
    }
}

void exceptional_ratio_checks(Checker& c, bool full) {
    std::vector<GroupType> types = {GroupType::H3, GroupType::F4};
    if (full) {
        types.push_back(GroupType::H4);
        types.push_back(GroupType::E6);
    }
    for (GroupType t : types) {
        c.run(type_name(t) + " census ratio", kPublished, [t]() -> Expect {
            ReflectionGroup group = ReflectionGroup::build(GroupSpec::exceptional(t));
            const auto ratio = census_ratio(group, kQuickBound);
            return {tables::published_ratio(t).str(), ratio.poly.str()};
        });
    }
}

void orbit_and_regularity_checks(Checker& c, bool full) {
    std::vector<GroupType> types = {GroupType::H3, GroupType::F4};
    if (full)
        types.insert(types.end(), {GroupType::H4, GroupType::E6, GroupType::E7,
                                   GroupType::E8});
    for (GroupType t : types) {
        c.run(type_name(t) + " minimal orbit size", kPublished, [t]() -> Expect {
            ReflectionGroup group = ReflectionGroup::build(GroupSpec::exceptional(t));
            const auto orbit =
                group.weight_orbit(minimal_weight(tables::cartan_matrix(t)));
            return {std::to_string(tables::minimal_orbit_size(t)),
                    std::to_string(orbit.size())};
        });
        c.run(type_name(t) + " certification point is regular", kPublished,
              [t]() -> Expect {
                  ReflectionGroup group =
                      ReflectionGroup::build(GroupSpec::exceptional(t));
                  const auto invs = basic_invariants(group);
                  std::vector<CycloScalar> v;
                  for (long x : tables::regular_vector(t)) v.emplace_back(x);
                  auto [ok, det] = is_regular(invs, v);
                  (void)det;
                  return {"nonzero jacobian", ok ? "nonzero jacobian" : "det = 0"};
              });
    }
}

void candidate_checks(Checker& c, bool full) {
    std::vector<GroupType> types = {GroupType::H3, GroupType::F4};
    if (full)
        types.insert(types.end(), {GroupType::H4, GroupType::E6, GroupType::E7,
                                   GroupType::E8});
    for (GroupType t : types) {
        c.run(type_name(t) + " candidate sets certify", kPublished, [t]() -> Expect {
            const GroupSpec spec = GroupSpec::exceptional(t);
            RatioPolynomial ratio{tables::published_ratio(t), spec.degrees()};
            return enumerate_and_certify(spec, ratio, true,
                                         tables::candidate_count(t));
        });
    }
}

void basis_checks(Checker& c) {
    c.run("dihedral basis {r1, r1^2, r2} certifies (n=2..12)", kOracle, []() -> Expect {
        for (unsigned n = 2; n <= 12; ++n) {
            ReflectionGroup group = ReflectionGroup::build(GroupSpec::I2(n));
            const auto invs = basic_invariants(group);
            const auto v = default_regular_vector(group, invs);
            const auto cert = certify(group.spec(), dihedral_basis(), invs, v);
            if (!cert.certified)
                return {"all certified", "degenerate at n=" + std::to_string(n)};
        }
        return {"all certified", "all certified"};
    });
    for (auto [type, n] : std::vector<std::pair<GroupType, unsigned>>{
             {GroupType::A, 3}, {GroupType::B, 3}, {GroupType::D, 4}}) {
        const std::string name = type_name(type) + ":" + std::to_string(n);
        c.run(name + " closed-form T certifies", kOracle, [type = type, n = n]() -> Expect {
            const GroupSpec spec = GroupSpec::classical(type, n);
            ReflectionGroup group = ReflectionGroup::build(spec);
            const auto invs = basic_invariants(group);
            const auto v = default_regular_vector(group, invs);
            const auto cert = certify(spec, classical_T(type, n), invs, v);
            return {"certified", cert.certified ? "certified" : "degenerate"};
        });
    }
}

void product_checks(Checker& c) {
    c.run("product ratio identity vs census ({+-1}^2, I2(3)xB1, A2xA2)", kOracle,
          []() -> Expect {
              struct Row {
                  GroupSpec a, b;
              };
              const std::vector<Row> rows = {
                  {GroupSpec::classical(GroupType::B, 1), GroupSpec::classical(GroupType::B, 1)},
                  {GroupSpec::I2(3), GroupSpec::classical(GroupType::B, 1)},
                  {GroupSpec::classical(GroupType::A, 2), GroupSpec::classical(GroupType::A, 2)},
              };
              for (const auto& row : rows) {
                  ReflectionGroup ga = ReflectionGroup::build(row.a);
                  ReflectionGroup gb = ReflectionGroup::build(row.b);
                  const auto ra = census_ratio(ga, kQuickBound);
                  const auto rb = census_ratio(gb, kQuickBound);
                  const UniPoly predicted = product_ratio(ra.poly, row.a.degrees(),
                                                          rb.poly, row.b.degrees());
                  GroupSpec prod = GroupSpec::product(row.a, row.b);
                  ReflectionGroup gp = ReflectionGroup::build(prod);
                  const auto rp = census_ratio(gp, kQuickBound);
                  if (!(predicted == rp.poly))
                      return {"identity holds", "mismatch for " + prod.name()};
              }
              return {"identity holds", "identity holds"};
          });
    c.run("product bases certify", kOracle, []() -> Expect {
        struct Row {
            GroupSpec a, b;
            CandidateSet ta, tb;
        };
        const CandidateSet b1_set = parse_candidate_set("r1");
        std::vector<Row> rows;
        rows.push_back({GroupSpec::classical(GroupType::B, 1),
                        GroupSpec::classical(GroupType::B, 1), b1_set, b1_set});
        rows.push_back({GroupSpec::I2(3), GroupSpec::classical(GroupType::B, 1),
                        dihedral_basis(), b1_set});
        rows.push_back({GroupSpec::classical(GroupType::A, 2),
                        GroupSpec::classical(GroupType::A, 2),
                        classical_T(GroupType::A, 2), classical_T(GroupType::A, 2)});
        for (auto& row : rows) {
            GroupSpec prod = GroupSpec::product(row.a, row.b);
            ReflectionGroup group = ReflectionGroup::build(prod);
            const auto invs = basic_invariants(group);
            const auto v = default_regular_vector(group, invs);
            const auto set =
                product_basis(row.ta, row.a.rank(), row.tb, row.b.rank());
            const auto cert = certify(prod, set, invs, v);
            if (!cert.certified) return {"all certified", "degenerate: " + prod.name()};
        }
        return {"all certified", "all certified"};
    });
}

void decompose_checks(Checker& c) {
    c.run("I2(4) identity tensor decomposes as (1/2) Hess(rho1)", kTrivial,
          []() -> Expect {
              ReflectionGroup group = ReflectionGroup::build(GroupSpec::I2(4));
              const auto invs = basic_invariants(group);
              SymTensorPoly id2(2);
              id2.set(0, 0, MultiPoly::constant(2, CycloScalar(1)));
              id2.set(1, 1, MultiPoly::constant(2, CycloScalar(1)));
              const auto d = decompose(id2, dihedral_basis(), invs, group);
              if (d.residual) return {"a = (1/2, 0, 0)", "residual"};
              const bool ok =
                  d.coefficients[0] == MultiPoly::constant(2, CycloScalar(Rational(1, 2))) &&
                  d.coefficients[1].is_zero() && d.coefficients[2].is_zero();
              return {"a = (1/2, 0, 0)", ok ? "a = (1/2, 0, 0)" : "unexpected coefficients"};
          });
    c.run("decompose(symmetrize(.)) round trip on I2(3)", kOracle, []() -> Expect {
        ReflectionGroup group = ReflectionGroup::build(GroupSpec::I2(3));
        group.enumerate(kQuickBound);
        const auto invs = basic_invariants(group);
        SymTensorPoly raw(2);
        MultiPoly p(2);
        p.add_term({2, 1}, CycloScalar(3));
        p.add_term({0, 1}, CycloScalar(Rational(1, 2)));
        raw.set(0, 0, p);
        raw.set(0, 1, MultiPoly::variable(2, 0));
        const auto sym = symmetrize(raw, group);
        const auto d = decompose(sym, dihedral_basis(), invs, group);
        if (d.residual) return {"zero residual", "residual set"};
        const auto back = reconstruct(d, invs);
        return {"zero residual", back == sym ? "zero residual" : "reconstruction differs"};
    });
}

} // namespace

bool RunReport::all_passed() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::Fail) return false;
    return true;
}

Json RunReport::to_json(bool include_timing) const {
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json entry{{"name", c.name},
                   {"status", c.status == CheckStatus::Pass     ? "pass"
                              : c.status == CheckStatus::Fail   ? "fail"
                                                                : "skipped"},
                   {"expected", c.expected},
                   {"computed", c.computed},
                   {"provenance", c.provenance}};
        if (include_timing) entry["millis"] = c.millis;
        arr.push_back(std::move(entry));
    }
    return Json{{"schema", "hessbasis/report/1"},
                {"profile", profile},
                {"checks", arr},
                {"all_passed", all_passed()}};
}

void RunReport::print(std::ostream& os) const {
    for (const auto& c : checks) {
        const char* tag = c.status == CheckStatus::Pass     ? "PASS"
                          : c.status == CheckStatus::Fail   ? "FAIL"
                                                            : "SKIP";
        os << tag << "  " << c.name;
        if (c.status == CheckStatus::Fail)
            os << "  (expected: " << c.expected << "; computed: " << c.computed << ")";
        if (c.status == CheckStatus::Skipped) os << "  (" << c.computed << ")";
        os << "  [" << static_cast<long>(c.millis) << " ms]\n";
    }
    os << (all_passed() ? "self-check passed" : "SELF-CHECK FAILED") << " ("
       << checks.size() << " checks, profile " << profile << ")\n";
}

RunReport run_selfcheck(const std::string& profile) {
    if (profile != "quick" && profile != "full" && profile != "long")
        throw Error("unknown self-check profile: " + profile);
    const bool full = profile != "quick";
    const bool long_profile = profile == "long";

    Checker c(profile);
    dihedral_checks(c);
    classical_checks(c, full);
    exceptional_ratio_checks(c, full);
    orbit_and_regularity_checks(c, full);
    candidate_checks(c, full);
    basis_checks(c);
    product_checks(c);
    decompose_checks(c);
    if (long_profile) {
        c.run("E7 census ratio (approx. 2.9M elements)", kPublished, []() -> Expect {
            ReflectionGroup group =
                ReflectionGroup::build(GroupSpec::exceptional(GroupType::E7));
            const auto ratio = census_ratio(group, kLongBound);
            return {tables::published_ratio(GroupType::E7).str(), ratio.poly.str()};
        });
    } else {
        c.skip("E7 census ratio", "long profile only (memory-heavy enumeration)");
    }
    c.skip("E8 census", "not enumerable at desk scale (order 696729600); "
                        "ratio consumed from the published table");
    return c.take();
}

} // namespace hessbasis
