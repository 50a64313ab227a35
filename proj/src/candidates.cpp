#include "covergrid/candidates.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "covergrid/errors.hpp"

namespace covergrid {

namespace {

int missing_pos(const Grid& g, const std::optional<Index>& missing) {
    if (!missing) return -1;
    int pos = g.point_pos(*missing);
    if (pos < 0) throw BadInput("missing point is not a grid point");
    return pos;
}

std::vector<std::vector<Rat>> all_coords(const Grid& g) {
    std::vector<std::vector<Rat>> c;
    c.reserve(g.size());
    for (const Index& p : g.points()) c.push_back(g.coords(p));
    return c;
}

bool collinear3(const std::vector<Rat>& a, const std::vector<Rat>& b,
                const std::vector<Rat>& c) {
    Rat ux = b[0] - a[0], uy = b[1] - a[1], uz = b[2] - a[2];
    Rat vx = c[0] - a[0], vy = c[1] - a[1], vz = c[2] - a[2];
    return (uy * vz - uz * vy).is_zero() && (uz * vx - ux * vz).is_zero() &&
           (ux * vy - uy * vx).is_zero();
}

}  // namespace

std::vector<CoveringSet> enumerate_candidates2(const Grid& g, std::optional<Index> missing,
                                               const CandidateOptions& opt) {
    if (g.dim() != 2) throw BadInput("enumerate_candidates2: grid must be 2D");
    const int mpos = missing_pos(g, missing);
    const auto coords = all_coords(g);
    const int P = static_cast<int>(g.size());

    std::map<Hyperplane, std::vector<int>> lines;
    for (int i = 0; i < P; ++i) {
        if (i == mpos) continue;
        for (int j = i + 1; j < P; ++j) {
            if (j == mpos) continue;
            Hyperplane h = Hyperplane::line_through(coords[i], coords[j]);
            if (mpos >= 0 && h.incident(coords[mpos])) continue;
            if (lines.count(h)) continue;
            std::vector<int> mem;
            for (int t = 0; t < P; ++t)
                if (t != mpos && h.incident(coords[t])) mem.push_back(t);
            lines.emplace(std::move(h), std::move(mem));
        }
    }

    std::vector<CoveringSet> out;
    out.reserve(lines.size() + P);
    for (auto& [h, mem] : lines)
        out.push_back(CoveringSet{CoveringSet::Tag::spanned, h, mem});
    if (!opt.paper_literal)
        for (int i = 0; i < P; ++i)
            if (i != mpos)
                out.push_back(CoveringSet{CoveringSet::Tag::singleton, std::nullopt, {i}});
    return out;
}

std::vector<CoveringSet> enumerate_candidates3(const Grid& g, std::optional<Index> missing,
                                               const CandidateOptions& opt) {
    if (g.dim() != 3) throw BadInput("enumerate_candidates3: grid must be 3D");
    const int mpos = missing_pos(g, missing);
    const auto coords = all_coords(g);
    const int P = static_cast<int>(g.size());

    std::map<Hyperplane, std::vector<int>> planes;
    for (int i = 0; i < P; ++i) {
        if (i == mpos) continue;
        for (int j = i + 1; j < P; ++j) {
            if (j == mpos) continue;
            for (int r = j + 1; r < P; ++r) {
                if (r == mpos) continue;
                auto h = Hyperplane::plane_through(coords[i], coords[j], coords[r]);
                if (!h) continue;
                if (mpos >= 0 && h->incident(coords[mpos])) continue;
                if (planes.count(*h)) continue;
                std::vector<int> mem;
                for (int t = 0; t < P; ++t)
                    if (t != mpos && h->incident(coords[t])) mem.push_back(t);
                planes.emplace(std::move(*h), std::move(mem));
            }
        }
    }

    // Maximal collinear sets; realizable by a plane through the line and no
    // other grid point, provided the line misses `missing`.
    std::set<std::vector<int>> line_sets;
    for (int i = 0; i < P; ++i) {
        if (i == mpos) continue;
        for (int j = i + 1; j < P; ++j) {
            if (j == mpos) continue;
            std::vector<int> mem;
            bool hits_missing = false;
            for (int t = 0; t < P; ++t) {
                if (t == i || t == j || collinear3(coords[i], coords[j], coords[t])) {
                    if (t == mpos) {
                        hits_missing = true;
                        break;
                    }
                    mem.push_back(t);
                }
            }
            if (hits_missing) continue;
            line_sets.insert(std::move(mem));
        }
    }

    std::vector<CoveringSet> out;
    for (auto& [h, mem] : planes)
        out.push_back(CoveringSet{CoveringSet::Tag::spanned, h, mem});
    for (const auto& mem : line_sets)
        out.push_back(CoveringSet{CoveringSet::Tag::line_set, std::nullopt, mem});
    if (!opt.paper_literal)
        for (int i = 0; i < P; ++i)
            if (i != mpos)
                out.push_back(CoveringSet{CoveringSet::Tag::singleton, std::nullopt, {i}});
    return out;
}

std::vector<CoveringSet> enumerate_candidates(const Grid& g, std::optional<Index> missing,
                                              const CandidateOptions& opt) {
    return g.dim() == 2 ? enumerate_candidates2(g, missing, opt)
                        : enumerate_candidates3(g, missing, opt);
}

namespace {

// Integer normal vectors with L-infinity norm exactly `radius`, first
// nonzero component positive, in lex order. Scanning shells radius 1, 2, ...
// gives a fixed deterministic realization order.
std::vector<std::vector<long>> normal_shell(int dim, long radius) {
    std::vector<std::vector<long>> out;
    std::vector<long> u(dim, -radius);
    while (true) {
        long linf = 0;
        for (long v : u) linf = std::max(linf, std::abs(v));
        if (linf == radius) {
            int lead = 0;
            while (lead < dim && u[lead] == 0) ++lead;
            if (lead < dim && u[lead] > 0) out.push_back(u);
        }
        int t = dim - 1;
        while (t >= 0 && u[t] == radius) u[t--] = -radius;
        if (t < 0) break;
        ++u[t];
    }
    return out;
}

}  // namespace

Hyperplane realize_candidate(const Grid& g, const CoveringSet& c,
                             std::optional<Index> missing) {
    if (c.tag == CoveringSet::Tag::spanned) {
        if (!c.plane) throw BadInput("realize_candidate: spanned candidate lacks plane");
        return *c.plane;
    }
    const int mpos = missing_pos(g, missing);
    const auto coords = all_coords(g);
    const int P = static_cast<int>(g.size());
    const int dim = g.dim();
    if (c.members.empty()) throw BadInput("realize_candidate: empty member list");
    const auto& base = coords[c.members.front()];

    std::vector<Rat> dir;
    if (c.tag == CoveringSet::Tag::line_set) {
        if (dim != 3 || c.members.size() < 2)
            throw BadInput("realize_candidate: malformed line-set candidate");
        const auto& second = coords[c.members[1]];
        for (int t = 0; t < 3; ++t) dir.push_back(second[t] - base[t]);
    }

    std::vector<bool> is_member(P, false);
    for (int t : c.members) is_member[t] = true;
    if (mpos >= 0 && is_member[mpos])
        throw BadInput("realize_candidate: candidate contains the missing point");

    for (long radius = 1; radius <= 4096; ++radius) {
        for (const auto& u : normal_shell(dim, radius)) {
            std::vector<Rat> uc(dim);
            for (int t = 0; t < dim; ++t) uc[t] = Rat(u[t]);
            if (!dir.empty()) {
                Rat d;
                for (int t = 0; t < 3; ++t) d += uc[t] * dir[t];
                if (!d.is_zero()) continue;
            }
            Rat rhs;
            for (int t = 0; t < dim; ++t) rhs += uc[t] * base[t];
            bool good = true;
            for (int t = 0; t < P && good; ++t) {
                if (is_member[t]) continue;
                Rat v;
                for (int s = 0; s < dim; ++s) v += uc[s] * coords[t][s];
                if (v == rhs) good = false;  // extra grid point (covers mpos too)
            }
            if (!good) continue;
            Hyperplane h = Hyperplane::from_rationals(uc, rhs);
            for (int t : c.members)
                if (!h.incident(coords[t]))
                    throw BadInput("realize_candidate: members are not collinear");
            return h;
        }
    }
    throw InternalError("realize_candidate: normal scan exhausted");
}

long Cover::total() const {
    long t = 0;
    for (const auto& e : entries) t += e.mult;
    return t;
}

CoverReport verify_cover(const Grid& g, const Cover& c, long k,
                         std::optional<Index> missing) {
    const int mpos = missing_pos(g, missing);
    const auto coords = all_coords(g);
    const int P = static_cast<int>(g.size());
    for (const auto& e : c.entries) {
        if (e.mult < 0) throw BadInput("verify_cover: negative multiplicity");
        if (!e.plane && !e.singleton_point)
            throw BadInput("verify_cover: entry with neither plane nor point");
        if (e.plane && e.plane->dim() != g.dim())
            throw BadInput("verify_cover: entry dimension mismatch");
    }

    CoverReport rep;
    rep.counts.assign(P, 0);
    for (const auto& e : c.entries) {
        if (e.plane) {
            for (int t = 0; t < P; ++t)
                if (e.plane->incident(coords[t])) rep.counts[t] += e.mult;
        } else {
            int pos = g.point_pos(*e.singleton_point);
            if (pos >= 0) rep.counts[pos] += e.mult;
        }
    }

    rep.ok = true;
    bool have_min = false;
    for (int t = 0; t < P; ++t) {
        if (t == mpos) {
            if (rep.counts[t] > 0) {
                rep.ok = false;
                rep.violations.push_back(
                    CoverViolation{g.points()[t], rep.counts[t], 0, true});
            }
            continue;
        }
        if (!have_min || rep.counts[t] < rep.min_coverage) {
            rep.min_coverage = rep.counts[t];
            have_min = true;
        }
        if (rep.counts[t] < k) {
            rep.ok = false;
            rep.violations.push_back(CoverViolation{g.points()[t], rep.counts[t], k, false});
        }
    }
    return rep;
}

}  // namespace covergrid
