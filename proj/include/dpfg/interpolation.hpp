#pragma once

// Exact Lagrange interpolation.  Given value pairs (x_i, f(x_i)) of a
// polynomial of degree <= #nodes-1, evaluates the interpolating polynomial
// anywhere, in particular at 0.  Used to take limits of families whose
// members are known to be polynomial in the deformation parameter.

#include "dpfg/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace dpfg {

inline Rational lagrange_eval(const std::vector<std::pair<Rational, Rational>>& nodes,
                              const Rational& at) {
    if (nodes.empty()) throw std::invalid_argument("lagrange_eval: no nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i].first == nodes[j].first)
                throw std::invalid_argument("lagrange_eval: duplicate abscissa " +
                                            nodes[i].first.to_string());
    Rational sum = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Rational term = nodes[i].second;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            term *= (at - nodes[j].first) / (nodes[i].first - nodes[j].first);
        }
        sum += term;
    }
    return sum;
}

inline Rational lagrange_at_zero(const std::vector<std::pair<Rational, Rational>>& nodes) {
    return lagrange_eval(nodes, Rational(0));
}

}  // namespace dpfg
