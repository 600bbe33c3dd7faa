#pragma once

#include <random>

#include "surdsym/continued_fraction.hpp"
#include "surdsym/form.hpp"

namespace testing {

using surdsym::Form;
using surdsym::Int;

inline std::mt19937_64 & rng()
{
    static std::mt19937_64 engine(20240611);
    return engine;
}

inline long long uniform(long long lo, long long hi)
{
    return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

// Indefinite form with |coefficients| <= range and a discriminant of the requested kind.
inline Form random_form(long long range, bool square_allowed = false, long long delta_max = 0)
{
    while (true) {
        Form f{uniform(-range, range), uniform(-range, range), uniform(-range, range)};
        Int d = surdsym::discriminant(f);
        if (d <= 0 || (!square_allowed && surdsym::is_square(d)))
            continue;
        if (delta_max > 0 && d > delta_max)
            continue;
        if (f.m == 0)
            continue;
        return f;
    }
}

inline Form random_square_form(long long range)
{
    while (true) {
        Form f{uniform(-range, range), uniform(-range, range), uniform(-range, range)};
        Int d = surdsym::discriminant(f);
        if (d > 0 && surdsym::is_square(d))
            return f;
    }
}

inline surdsym::GeneratorWord random_word(int max_runs, long long max_exponent)
{
    static constexpr surdsym::Generator gens[] = {surdsym::Generator::A, surdsym::Generator::B,
                                                  surdsym::Generator::R, surdsym::Generator::AInv,
                                                  surdsym::Generator::BInv};
    surdsym::GeneratorWord w;
    int runs = static_cast<int>(uniform(0, max_runs));
    for (int i = 0; i < runs; ++i)
        w.append(gens[uniform(0, 4)], uniform(1, max_exponent));
    return w;
}

}  // namespace testing
