#pragma once

#include <numeric>
#include <string>

#include "maxmatch/graph.hpp"

namespace maxmatch {

// Small exact rational for the relaxed edge bound.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    friend bool operator==(const Rational&, const Rational&) = default;

    std::string str() const;
};

bool operator<(const Rational& a, const Rational& b);
inline bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }

// Construction parameters: remainder t of nu modulo ceil(delta/2).
struct ExtremalSpec {
    int delta = 0;
    int nu = 0;
    int t = 0;
};

ExtremalSpec extremal_spec(int delta, int nu);

// Maximum edge count of a simple graph without isolated vertices having
// the given maximum degree and matching number:
//   delta*nu + floor(nu / ceil(delta/2)) * floor(delta/2)
long long edge_bound(int delta, int nu);

// The weaker closed form nu * (delta + floor(delta/2)/ceil(delta/2)),
// always >= edge_bound.
Rational edge_bound_relaxed(int delta, int nu);

// The unique connected extremal graph with nu = ceil(delta/2): K_{delta+1}
// for even delta; for odd delta, K_{delta+1} minus a perfect matching plus
// an apex joined to all but one vertex. Output stats are re-verified.
Graph construct_c(int delta);

// A graph attaining edge_bound(delta, nu): t stars K_{1,delta} plus
// floor(nu/ceil(delta/2)) copies of construct_c(delta) (with the small
// catalog cases for delta = 1 and nu = 1). Stats re-verified.
Graph construct_attaining(int delta, int nu);

// A second, non-isomorphic graph with the same (delta, nu, |E|). Only
// exists when ceil(delta/2) does not divide nu; otherwise throws (the
// attaining graph is unique).
Graph construct_alternative(int delta, int nu);

} // namespace maxmatch
