#include "covergrid/incidence.hpp"

#include <sstream>

#include "covergrid/errors.hpp"

namespace covergrid {

Hyperplane::Hyperplane(std::vector<mpz_class> coeffs, mpz_class rhs)
    : coeffs_(std::move(coeffs)), rhs_(std::move(rhs)) {
    if (coeffs_.size() != 2 && coeffs_.size() != 3)
        throw BadInput("Hyperplane: dimension must be 2 or 3");
    bool all_zero = true;
    mpz_class g = ::abs(rhs_);
    for (const auto& c : coeffs_) {
        if (c != 0) all_zero = false;
        mpz_class t;
        mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        g = t;
    }
    if (all_zero) throw BadInput("Hyperplane: all coefficients zero");
    if (g > 1) {
        for (auto& c : coeffs_) c /= g;
        rhs_ /= g;
    }
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        if (c < 0) {
            for (auto& cc : coeffs_) cc = -cc;
            rhs_ = -rhs_;
        }
        break;
    }
}

Hyperplane Hyperplane::from_rationals(const std::vector<Rat>& coeffs, const Rat& rhs) {
    mpz_class lcm = rhs.den();
    for (const auto& c : coeffs) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
        lcm = l;
    }
    std::vector<mpz_class> ic;
    ic.reserve(coeffs.size());
    for (const auto& c : coeffs) ic.push_back(c.num() * (lcm / c.den()));
    return Hyperplane(std::move(ic), rhs.num() * (lcm / rhs.den()));
}

Hyperplane Hyperplane::line_through(const std::vector<Rat>& p, const std::vector<Rat>& q) {
    if (p.size() != 2 || q.size() != 2)
        throw BadInput("line_through: 2D points required");
    if (p == q) throw BadInput("line_through: points coincide");
    Rat a = q[1] - p[1];
    Rat b = p[0] - q[0];
    Rat c = a * p[0] + b * p[1];
    return from_rationals({a, b}, c);
}

std::optional<Hyperplane> Hyperplane::plane_through(const std::vector<Rat>& p,
                                                    const std::vector<Rat>& q,
                                                    const std::vector<Rat>& r) {
    if (p.size() != 3 || q.size() != 3 || r.size() != 3)
        throw BadInput("plane_through: 3D points required");
    Rat ux = q[0] - p[0], uy = q[1] - p[1], uz = q[2] - p[2];
    Rat vx = r[0] - p[0], vy = r[1] - p[1], vz = r[2] - p[2];
    Rat nx = uy * vz - uz * vy;
    Rat ny = uz * vx - ux * vz;
    Rat nz = ux * vy - uy * vx;
    if (nx.is_zero() && ny.is_zero() && nz.is_zero()) return std::nullopt;
    Rat rhs = nx * p[0] + ny * p[1] + nz * p[2];
    return from_rationals({nx, ny, nz}, rhs);
}

bool Hyperplane::incident(const std::vector<Rat>& point) const {
    if (point.size() != coeffs_.size())
        throw BadInput("incident: dimension mismatch");
    Rat acc;
    for (std::size_t t = 0; t < coeffs_.size(); ++t)
        acc += Rat(coeffs_[t]) * point[t];
    return acc == Rat(rhs_);
}

bool Hyperplane::incident(const Grid& g, const Index& p) const {
    if (g.dim() != dim()) throw BadInput("incident: dimension mismatch");
    Rat acc;
    for (int t = 0; t < g.dim(); ++t) acc += Rat(coeffs_[t]) * g.coord(p, t);
    return acc == Rat(rhs_);
}

bool Hyperplane::axis_parallel() const {
    for (const auto& c : coeffs_)
        if (c == 0) return true;
    return false;
}

std::string Hyperplane::str() const {
    std::ostringstream os;
    const char* names = "xyz";
    bool first = true;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        if (coeffs_[t] == 0) continue;
        mpz_class a = coeffs_[t];
        if (first) {
            if (a == -1) os << "-";
            else if (a != 1) os << a.get_str() << "*";
        } else {
            os << (a < 0 ? " - " : " + ");
            mpz_class m = ::abs(a);
            if (m != 1) os << m.get_str() << "*";
        }
        os << names[t];
        first = false;
    }
    os << " = " << rhs_.get_str();
    return os.str();
}

bool operator<(const Hyperplane& a, const Hyperplane& b) {
    if (a.coeffs_.size() != b.coeffs_.size())
        return a.coeffs_.size() < b.coeffs_.size();
    for (std::size_t t = 0; t < a.coeffs_.size(); ++t) {
        int c = cmp(a.coeffs_[t], b.coeffs_[t]);
        if (c != 0) return c < 0;
    }
    return cmp(a.rhs_, b.rhs_) < 0;
}

bool incident(const Grid& g, const Index& p, const Hyperplane& h) {
    return h.incident(g, p);
}

}  // namespace covergrid
