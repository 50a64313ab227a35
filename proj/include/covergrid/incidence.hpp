#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "covergrid/grid.hpp"
#include "covergrid/rational.hpp"

namespace covergrid {

/// Affine hyperplane {x : coeffs.x = rhs} with integer data in canonical
/// form: gcd of all coefficients and the right-hand side is 1, and the first
/// nonzero coefficient is positive. Two hyperplanes denote the same affine
/// set iff their fields are equal.
class Hyperplane {
  public:
    Hyperplane(std::vector<mpz_class> coeffs, mpz_class rhs);

    static Hyperplane from_rationals(const std::vector<Rat>& coeffs, const Rat& rhs);
    static Hyperplane line_through(const std::vector<Rat>& p, const std::vector<Rat>& q);
    /// Plane spanned by three points; nullopt when they are collinear.
    static std::optional<Hyperplane> plane_through(const std::vector<Rat>& p,
                                                   const std::vector<Rat>& q,
                                                   const std::vector<Rat>& r);

    int dim() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& rhs() const { return rhs_; }

    bool incident(const std::vector<Rat>& point) const;
    bool incident(const Grid& g, const Index& p) const;

    /// True when the hyperplane is parallel to every axis outside its
    /// support, i.e. some coefficient is zero.
    bool axis_parallel() const;

    std::string str() const;

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
        return a.rhs_ == b.rhs_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator<(const Hyperplane& a, const Hyperplane& b);

  private:
    std::vector<mpz_class> coeffs_;
    mpz_class rhs_;
};

bool incident(const Grid& g, const Index& p, const Hyperplane& h);

}  // namespace covergrid
