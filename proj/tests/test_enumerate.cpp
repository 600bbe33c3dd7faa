#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "surdsym/enumerate.hpp"
#include "surdsym/oracle.hpp"

using namespace surdsym;

TEST_CASE("h0_forms")
{
    auto forms = h0_forms(5);
    for (const Form & f : forms) {
        CHECK(discriminant(f) == 5);
        CHECK(f.m > 0);
        CHECK(f.n < 0);
    }
    CHECK(std::is_sorted(forms.begin(), forms.end()));
    CHECK(std::find(forms.begin(), forms.end(), Form{1, -1, 1}) != forms.end());
    CHECK(std::find(forms.begin(), forms.end(), Form{1, -1, -1}) != forms.end());
    CHECK(h0_forms(5).size() == 2);
}

TEST_CASE("class enumeration examples")
{
    CHECK(enumerate_classes(5) == std::vector<Form>{{1, -1, 1}});
    CHECK(enumerate_classes(12).size() == 2);
    CHECK(enumerate_classes(17).size() == 1);
    CHECK(enumerate_classes(9).size() == 3);
    CHECK(enumerate_classes(9).front() == Form{0, 0, 3});
    for (const Form & f : enumerate_classes(148))
        CHECK(is_principal(f));
}

TEST_CASE("classes partition the H0 forms")
{
    for (Int d = 5; d <= 400; d += 1) {
        if (is_square(d) || (d % 4 != 0 && d % 4 != 1))
            continue;
        Int total = 0;
        std::set<Form> reps;
        for (const Form & rep : enumerate_classes(d)) {
            total += classify_class(rep).t;
            CHECK(canonical_representative(rep) == rep);
            reps.insert(rep);
        }
        CHECK(total == Int(static_cast<long long>(h0_forms(d).size())));
        for (const Form & f : h0_forms(d))
            CHECK(reps.count(canonical_representative(f)) == 1);
    }
}

TEST_CASE("canonical representative is a class invariant")
{
    for (int i = 0; i < 500; ++i) {
        Form f = testing::random_form(60, true);
        Form g = apply_word(f, testing::random_word(5, 4));
        CHECK(canonical_representative(f) == canonical_representative(g));
    }
}

TEST_CASE("square discriminant has one class per residue")
{
    for (Int s = 1; s <= 30; s += 1) {
        auto reps = enumerate_classes(s * s);
        CHECK(Int(static_cast<long long>(reps.size())) == s);
        for (Int m = 0; m < s; m += 1)
            CHECK(reps[static_cast<std::size_t>(m.to_int64())] == Form{m, 0, s});
    }
}

TEST_CASE("class table is independent of jobs")
{
    auto a = class_table(300, TableKind::Nonzero, 1);
    auto b = class_table(300, TableKind::Nonzero, 4);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end(),
                         [](const ClassReport & x, const ClassReport & y) { return x.delta < y.delta; }));
    auto z = class_table(100, TableKind::Zero, 3);
    CHECK(z.size() == 55);
    CHECK(symmetry_stats(500, 1) == symmetry_stats(500, 5));
}

TEST_CASE("stats rows add up")
{
    for (const StatsRow & r : symmetry_stats(2000, 2)) {
        Int sum = 0;
        for (const Int & c : r.counts)
            sum += c;
        CHECK(sum == r.total);
        CHECK(r.total == Int(static_cast<long long>(enumerate_classes(r.delta).size())));
    }
}

TEST_CASE("parallel_for")
{
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 8, [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK_THROWS_AS(parallel_for(10, 4,
                                 [](std::size_t i) {
                                     if (i == 7)
                                         throw DomainError("boom");
                                 }),
                    DomainError);
}

TEST_CASE("first occurrence of each symmetry type among non-square discriminants")
{
    std::map<SymmetryType, ClassReport> first;
    for (const ClassReport & r : class_table(500, TableKind::Nonzero))
        first.try_emplace(r.symmetry, r);
    CHECK(first.at(SymmetryType::Supersymmetric).delta == 5);
    CHECK(first.at(SymmetryType::KSymmetric).delta == 12);
    CHECK(first.at(SymmetryType::Antisymmetric).delta == 145);
    CHECK(first.at(SymmetryType::Antisymmetric).gamma == Sequence{1, 3, 5});
    CHECK(first.at(SymmetryType::MPlusNSymmetric).delta == 136);
    CHECK(first.at(SymmetryType::Asymmetric).delta == 316);

    // the periods quoted for 148, 221 and 396 do occur there
    auto has = [](Int d, SymmetryType t, Sequence p) {
        for (const Form & f : enumerate_classes(d)) {
            ClassReport r = classify_class(f);
            if (r.symmetry == t && is_rotation_of(r.gamma, p))
                return true;
        }
        return false;
    };
    CHECK(has(148, SymmetryType::Antisymmetric, {1, 2, 3}));
    CHECK(has(221, SymmetryType::MPlusNSymmetric, {1, 2, 2, 1}));
    CHECK(has(396, SymmetryType::Asymmetric, {1, 1, 2, 3}));
}
