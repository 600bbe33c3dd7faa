#include "surdsym/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_set>

#include "surdsym/continued_fraction.hpp"
#include "surdsym/reduction.hpp"

namespace surdsym {

namespace {

Form h0_step(const Form & f)
{
    return compare(root_plus(f), 1) > 0 ? apply_generator(f, Generator::A)
                                        : apply_generator(f, Generator::B);
}

bool eligible(Int d)
{
    Int r = floor_mod(d, 4);
    return d > 0 && (r == 0 || r == 1);
}

template <typename Visit>
void walk_cycle(const Form & start, std::size_t cap, Visit visit)
{
    Form g = start;
    std::size_t steps = 0;
    do {
        if (steps++ > cap)
            throw std::logic_error("H0 cycle of " + start.to_string() + " did not close");
        visit(g);
        g = h0_step(g);
    } while (g != start);
}

}  // namespace

std::vector<Form> h0_forms(Int d)
{
    std::vector<Form> out;
    if (!eligible(d))
        return out;
    const Int r = isqrt(d);
    for (Int k = -r; k <= r; k += 1) {
        if (k * k >= d || floor_mod(k - d, 2) != 0)
            continue;
        const Int prod = (d - k * k) / 4;
        for (Int m = 1; m * m <= prod; m += 1) {
            if (prod % m != 0)
                continue;
            out.push_back(Form{m, -(prod / m), k});
            if (m * m != prod)
                out.push_back(Form{prod / m, -m, k});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_principal(const Form & f)
{
    return f.m > 0 && f.n < 0 && f.k > abs(f.m + f.n);
}

std::vector<Form> enumerate_classes(Int d)
{
    std::vector<Form> reps;
    if (!eligible(d))
        return reps;
    if (is_square(d)) {
        const Int s = isqrt(d);
        for (Int m = 0; m < s; m += 1)
            reps.push_back(Form{m, 0, s});
        return reps;
    }
    const std::vector<Form> h0 = h0_forms(d);
    std::unordered_set<Form> assigned;
    for (const Form & f : h0) {
        if (!is_principal(f) || assigned.contains(f))
            continue;
        reps.push_back(f);
        walk_cycle(f, h0.size(), [&](const Form & g) { assigned.insert(g); });
    }
    return reps;
}

Form canonical_representative(const Form & f)
{
    const Int d = discriminant(f);
    if (d <= 0)
        throw DomainError("form " + f.to_string() + " is not indefinite");
    if (is_square(d))
        return normalize_square_class(f);
    Form g = reduce_to_H0(f).form;
    if (g.m < 0)
        g = apply_generator(g, Generator::R);
    // the walk permutes H0, so g is on its own cycle
    std::size_t cap = 4;
    for (const Int & a : double_if_odd(period_of_class(g)))
        cap += static_cast<std::size_t>(a.to_int64());
    std::optional<Form> best;
    walk_cycle(g, cap, [&](const Form & h) {
        if (is_principal(h) && (!best || h < *best))
            best = h;
    });
    if (!best)
        throw std::logic_error("class of " + f.to_string() + " has no principal form");
    return *best;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)> & fn)
{
    const std::size_t workers =
        std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(run);
    for (auto & t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

std::vector<ClassReport> class_table(Int delta_max, TableKind which, int jobs)
{
    std::vector<Int> discs;
    if (which == TableKind::Zero) {
        for (Int s = 1; s * s <= delta_max; s += 1)
            discs.push_back(s * s);
    } else {
        for (Int d = 5; d <= delta_max; d += 1)
            if (eligible(d) && !is_square(d))
                discs.push_back(d);
    }
    std::vector<std::vector<ClassReport>> parts(discs.size());
    parallel_for(discs.size(), jobs, [&](std::size_t i) {
        for (const Form & rep : enumerate_classes(discs[i]))
            parts[i].push_back(classify_class(rep));
    });
    std::vector<ClassReport> out;
    for (auto & p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<StatsRow> symmetry_stats(Int delta_max, int jobs)
{
    std::vector<Int> discs;
    for (Int d = 1; d <= delta_max; d += 1)
        if (eligible(d))
            discs.push_back(d);
    std::vector<StatsRow> rows(discs.size());
    parallel_for(discs.size(), jobs, [&](std::size_t i) {
        const Int d = discs[i];
        StatsRow row{d, is_square(d), 0, {}};
        for (const Form & rep : enumerate_classes(d)) {
            SymmetryType t = row.square ? classify_square(rep.m, rep.k)
                                        : classify_period(period_of_class(rep));
            row.counts[static_cast<std::size_t>(t)] += 1;
            row.total += 1;
        }
        rows[i] = row;
    });
    return rows;
}

}  // namespace surdsym
