#include "tropinv/newton_polyhedron.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tropinv {

namespace {

void check_dimension(int n) {
    if (n < 1) throw DimensionMismatch("dimension must be >= 1");
}

// Solve A y = r exactly; false if A is singular.
bool solve_square(RationalMat a, RationalVec r, RationalVec& out) {
    const Eigen::Index n = a.rows();
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index row = col; row < n; ++row) {
            if (a(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return false;
        if (pivot != col) {
            for (Eigen::Index k = col; k < n; ++k) std::swap(a(pivot, k), a(col, k));
            std::swap(r(pivot), r(col));
        }
        const Rational inv = a(col, col);
        for (Eigen::Index row = col + 1; row < n; ++row) {
            if (a(row, col) == 0) continue;
            const Rational factor = a(row, col) / inv;
            a(row, col) = 0;
            for (Eigen::Index k = col + 1; k < n; ++k) a(row, k) -= factor * a(col, k);
            r(row) -= factor * r(col);
        }
    }
    out.resize(n);
    for (Eigen::Index row = n - 1; row >= 0; --row) {
        Rational s = r(row);
        for (Eigen::Index k = row + 1; k < n; ++k) s -= a(row, k) * out(k);
        out(row) = s / a(row, row);
    }
    return true;
}

void sort_unique(std::vector<RationalVec>& vs) {
    std::sort(vs.begin(), vs.end(), lex_less);
    vs.erase(std::unique(vs.begin(), vs.end(), vec_eq), vs.end());
}

// Keep only points not dominated componentwise by another point.
std::vector<RationalVec> domination_filter(const std::vector<RationalVec>& pts) {
    std::vector<RationalVec> kept;
    for (size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < pts.size() && !dominated; ++j)
            if (j != i && dominates(pts[i], pts[j]) && !vec_eq(pts[i], pts[j]))
                dominated = true;
        if (!dominated) kept.push_back(pts[i]);
    }
    return kept;
}

// Vertices of the blocking region {y >= 0 : <w, y> >= 1 for all w in rows}.
// For an up-closed region P = conv(V) + R^n_+ this is simultaneously the
// facet-normal set of P (rows = V) and the vertex set of P (rows = facet
// normals scaled to offset 1). Brute-force basis enumeration; fine at desk
// scale (n <= 4, a few dozen rows).
std::vector<RationalVec> blocker_vertices(int n, const std::vector<RationalVec>& rows) {
    std::vector<RationalVec> verts;
    if (rows.empty()) {
        verts.emplace_back(RationalVec::Zero(n));
        return verts;
    }
    for (const auto& w : rows)
        if (is_zero_vec(w)) return {};  // <0,y> >= 1 is infeasible

    const int m = static_cast<int>(rows.size());
    const int total = m + n;  // rows, then the n planes y_k = 0

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    RationalMat a(n, n);
    RationalVec rhs(n), y;

    while (true) {
        for (int i = 0; i < n; ++i) {
            if (idx[i] < m) {
                for (int k = 0; k < n; ++k) a(i, k) = rows[idx[i]](k);
                rhs(i) = 1;
            } else {
                for (int k = 0; k < n; ++k) a(i, k) = 0;
                a(i, idx[i] - m) = 1;
                rhs(i) = 0;
            }
        }
        if (solve_square(a, rhs, y) && all_nonneg(y)) {
            bool feasible = true;
            for (int j = 0; j < m && feasible; ++j)
                if (dot(rows[j], y) < 1) feasible = false;
            if (feasible) verts.push_back(y);
        }
        // next n-combination of {0..total-1}
        int i = n - 1;
        while (i >= 0 && idx[i] == total - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int k = i + 1; k < n; ++k) idx[k] = idx[k - 1] + 1;
    }
    sort_unique(verts);
    return verts;
}

// <y, b> >= 1 rewritten with coprime integer entries.
Facet primitive_facet(const RationalVec& y) {
    const Eigen::Index n = y.size();
    Integer l = 1;
    for (Eigen::Index i = 0; i < n; ++i) l = lcm(l, denominator(y(i)));
    Integer g = l;
    std::vector<Integer> num(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        num[i] = numerator(y(i)) * (l / denominator(y(i)));
        g = gcd(g, num[i]);
    }
    Facet f;
    f.normal.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) f.normal(i) = Rational(num[i] / g);
    f.offset = Rational(l / g);
    return f;
}

bool facet_less(const Facet& a, const Facet& b) {
    if (lex_less(a.normal, b.normal)) return true;
    if (lex_less(b.normal, a.normal)) return false;
    return a.offset < b.offset;
}

std::vector<Facet> facets_from_blocker(const std::vector<RationalVec>& blocker) {
    std::vector<Facet> fs;
    fs.reserve(blocker.size());
    for (const auto& y : blocker) fs.push_back(primitive_facet(y));
    std::sort(fs.begin(), fs.end(), facet_less);
    return fs;
}

std::vector<RationalVec> facet_rows_normalized(const std::vector<Facet>& fs) {
    std::vector<RationalVec> rows;
    rows.reserve(fs.size());
    for (const auto& f : fs) {
        RationalVec r(f.normal.size());
        for (Eigen::Index i = 0; i < f.normal.size(); ++i) r(i) = f.normal(i) / f.offset;
        rows.push_back(r);
    }
    return rows;
}

} // namespace

bool operator==(const Facet& a, const Facet& b) {
    return a.offset == b.offset && vec_eq(a.normal, b.normal);
}

bool operator==(const NewtonPolyhedron& a, const NewtonPolyhedron& b) {
    if (a.n_ != b.n_ || a.generators_.size() != b.generators_.size()) return false;
    for (size_t i = 0; i < a.generators_.size(); ++i)
        if (!vec_eq(a.generators_[i], b.generators_[i])) return false;
    return true;
}

NewtonPolyhedron NewtonPolyhedron::from_generators(int n, std::vector<RationalVec> generators) {
    check_dimension(n);
    if (generators.empty()) throw EmptyGenerators("generator set is empty");
    for (const auto& g : generators) {
        if (g.size() != n) throw DimensionMismatch("generator has wrong dimension");
        if (!all_nonneg(g)) throw InvalidExponent("generator has a negative coordinate");
    }
    NewtonPolyhedron p;
    p.n_ = n;

    sort_unique(generators);
    for (const auto& g : generators) {
        if (is_zero_vec(g)) {  // 0 dominates everything: region is R^n_+
            p.generators_ = {RationalVec::Zero(n)};
            return p;
        }
    }
    const auto candidates = domination_filter(generators);
    const auto blocker = blocker_vertices(n, candidates);
    p.facets_ = facets_from_blocker(blocker);
    p.generators_ = blocker_vertices(n, facet_rows_normalized(p.facets_));
    return p;
}

NewtonPolyhedron NewtonPolyhedron::from_halfspaces(int n, const std::vector<Facet>& constraints) {
    if (constraints.empty()) throw EmptyGenerators("no constraints given");
    return intersect_halfspaces(n, constraints);
}

NewtonPolyhedron intersect_halfspaces(int n, const std::vector<Facet>& constraints) {
    check_dimension(n);
    std::vector<RationalVec> rows;
    for (const auto& c : constraints) {
        if (c.normal.size() != n) throw DimensionMismatch("constraint has wrong dimension");
        if (!all_nonneg(c.normal)) throw InvalidDirection("constraint normal has a negative coordinate");
        if (c.offset <= 0) continue;  // implied by b >= 0
        if (is_zero_vec(c.normal)) throw InvalidDirection("zero normal with positive offset");
        RationalVec r(n);
        for (Eigen::Index i = 0; i < n; ++i) r(i) = c.normal(i) / c.offset;
        rows.push_back(r);
    }
    std::vector<RationalVec> gens = blocker_vertices(n, rows);
    return NewtonPolyhedron::from_generators(n, std::move(gens));
}

NewtonPolyhedron canonicalize(int n, const std::vector<RationalVec>& generators) {
    return NewtonPolyhedron::from_generators(n, generators);
}

Rational support_min(const NewtonPolyhedron& p, const RationalVec& a) {
    if (a.size() != p.dimension()) throw DimensionMismatch("direction has wrong dimension");
    if (!all_nonneg(a)) throw InvalidDirection("direction has a negative coordinate");
    Rational best;
    bool first = true;
    for (const auto& g : p.generators()) {
        Rational v = dot(a, g);
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& p, const NewtonPolyhedron& q) {
    if (p.dimension() != q.dimension()) throw DimensionMismatch("minkowski_sum of different dimensions");
    std::vector<RationalVec> sums;
    sums.reserve(p.generators().size() * q.generators().size());
    for (const auto& g : p.generators())
        for (const auto& h : q.generators())
            sums.push_back(g + h);
    return NewtonPolyhedron::from_generators(p.dimension(), std::move(sums));
}

NewtonPolyhedron union_hull(const NewtonPolyhedron& p, const NewtonPolyhedron& q) {
    if (p.dimension() != q.dimension()) throw DimensionMismatch("union_hull of different dimensions");
    std::vector<RationalVec> gens = p.generators();
    gens.insert(gens.end(), q.generators().begin(), q.generators().end());
    return NewtonPolyhedron::from_generators(p.dimension(), std::move(gens));
}

NewtonPolyhedron scale(const NewtonPolyhedron& p, const Rational& c) {
    if (c <= 0) throw InvalidExponent("scale factor must be positive");
    std::vector<RationalVec> gens;
    gens.reserve(p.generators().size());
    for (const auto& g : p.generators()) gens.push_back(scaled(g, c));
    return NewtonPolyhedron::from_generators(p.dimension(), std::move(gens));
}

ExtRational gauge(const NewtonPolyhedron& p, const RationalVec& v) {
    if (v.size() != p.dimension()) throw DimensionMismatch("point has wrong dimension");
    if (!all_nonneg(v)) throw InvalidDirection("point has a negative coordinate");
    if (is_zero_vec(v)) throw ZeroPoint("gauge at the origin");
    if (p.facets().empty()) return ExtRational::infinity();  // whole orthant
    Rational best;
    bool first = true;
    for (const auto& f : p.facets()) {
        Rational s = dot(f.normal, v) / f.offset;
        if (first || s < best) {
            best = s;
            first = false;
        }
    }
    return best;
}

bool contains(const NewtonPolyhedron& p, const RationalVec& v) {
    if (v.size() != p.dimension()) throw DimensionMismatch("point has wrong dimension");
    if (!all_nonneg(v)) return false;
    for (const auto& f : p.facets())
        if (dot(f.normal, v) < f.offset) return false;
    return true;
}

bool is_convenient(const NewtonPolyhedron& p) {
    const int n = p.dimension();
    for (int k = 0; k < n; ++k) {
        bool met = false;
        for (const auto& g : p.generators()) {
            bool on_axis = true;
            for (int j = 0; j < n && on_axis; ++j)
                if (j != k && g(j) != 0) on_axis = false;
            if (on_axis) {
                met = true;
                break;
            }
        }
        if (!met) return false;
    }
    return true;
}

namespace {

// Max axis intercept of a convenient polyhedron; 0 only for the whole orthant.
Rational max_axis_intercept(const NewtonPolyhedron& p) {
    const int n = p.dimension();
    Rational best = 0;
    for (int k = 0; k < n; ++k) {
        Rational intercept;
        bool have = false;
        for (const auto& g : p.generators()) {
            bool on_axis = true;
            for (int j = 0; j < n && on_axis; ++j)
                if (j != k && g(j) != 0) on_axis = false;
            if (on_axis && (!have || g(k) < intercept)) {
                intercept = g(k);
                have = true;
            }
        }
        if (have && intercept > best) best = intercept;
    }
    return best;
}

struct Constraint {
    RationalVec normal;
    Rational rhs;
    bool ge;  // normal . b >= rhs; otherwise <=
};

// Vertices of a bounded region given by mixed constraints (basis enumeration).
std::vector<RationalVec> region_vertices(int n, const std::vector<Constraint>& cs) {
    const int total = static_cast<int>(cs.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    RationalMat a(n, n);
    RationalVec rhs(n), y;
    std::vector<RationalVec> verts;
    while (true) {
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) a(i, k) = cs[idx[i]].normal(k);
            rhs(i) = cs[idx[i]].rhs;
        }
        if (solve_square(a, rhs, y)) {
            bool ok = true;
            for (const auto& c : cs) {
                Rational v = dot(c.normal, y);
                if (c.ge ? v < c.rhs : v > c.rhs) {
                    ok = false;
                    break;
                }
            }
            if (ok) verts.push_back(y);
        }
        int i = n - 1;
        while (i >= 0 && idx[i] == total - n + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int k = i + 1; k < n; ++k) idx[k] = idx[k - 1] + 1;
    }
    sort_unique(verts);
    return verts;
}

Rational cross2(const RationalVec& a, const RationalVec& b) {
    return a(0) * b(1) - a(1) * b(0);
}

Rational polygon_area(std::vector<RationalVec>& pts) {
    const size_t m = pts.size();
    if (m < 3) return 0;
    RationalVec c = RationalVec::Zero(2);
    for (const auto& p : pts) c = c + p;
    c(0) /= int(m);
    c(1) /= int(m);
    auto half = [](const RationalVec& v) {
        return (v(1) > 0 || (v(1) == 0 && v(0) > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const RationalVec& a, const RationalVec& b) {
        RationalVec va = a - c, vb = b - c;
        int ha = half(va), hb = half(vb);
        if (ha != hb) return ha < hb;
        Rational cr = cross2(va, vb);
        if (cr != 0) return cr > 0;
        return dot(va, va) < dot(vb, vb);
    });
    Rational twice = 0;
    for (size_t i = 0; i < m; ++i) twice += cross2(pts[i], pts[(i + 1) % m]);
    if (twice < 0) twice = -twice;
    return twice / 2;
}

// Hyperplane through d affinely independent points; false if degenerate.
bool hyperplane_through(const std::vector<RationalVec>& pts, const std::vector<int>& idx,
                        int d, RationalVec& normal, Rational& offset) {
    RationalMat m(d - 1, d);
    for (int i = 1; i < d; ++i)
        for (int k = 0; k < d; ++k) m(i - 1, k) = pts[idx[i]](k) - pts[idx[0]](k);
    // Nullspace of an (d-1) x d matrix by elimination.
    std::vector<int> pivot_col(d - 1, -1);
    int row = 0;
    for (int col = 0; col < d && row < d - 1; ++col) {
        int pr = -1;
        for (int r = row; r < d - 1; ++r)
            if (m(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int k = 0; k < d; ++k) std::swap(m(pr, k), m(row, k));
        for (int r = 0; r < d - 1; ++r) {
            if (r == row || m(r, col) == 0) continue;
            Rational f = m(r, col) / m(row, col);
            for (int k = 0; k < d; ++k) m(r, k) -= f * m(row, k);
        }
        pivot_col[row] = col;
        ++row;
    }
    if (row < d - 1) return false;  // points not affinely independent
    int free_col = -1;
    for (int col = 0; col < d; ++col) {
        bool used = false;
        for (int r = 0; r < d - 1; ++r)
            if (pivot_col[r] == col) used = true;
        if (!used) {
            free_col = col;
            break;
        }
    }
    normal = RationalVec::Zero(d);
    normal(free_col) = 1;
    for (int r = 0; r < d - 1; ++r)
        normal(pivot_col[r]) = -m(r, free_col) / m(r, pivot_col[r]);
    offset = dot(normal, pts[idx[0]]);
    return true;
}

RationalVec drop_coordinate(const RationalVec& v, int k) {
    RationalVec r(v.size() - 1);
    Eigen::Index j = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (i != k) r(j++) = v(i);
    return r;
}

struct FacetKey {
    std::vector<std::string> repr;
    bool operator<(const FacetKey& o) const { return repr < o.repr; }
};

FacetKey facet_key(const RationalVec& normal, const Rational& offset) {
    FacetKey k;
    for (Eigen::Index i = 0; i < normal.size(); ++i) k.repr.push_back(format_rational(normal(i)));
    k.repr.push_back(format_rational(offset));
    return k;
}

} // namespace

Rational polytope_volume(std::vector<RationalVec> points, int dim) {
    sort_unique(points);
    const int m = static_cast<int>(points.size());
    if (m < dim + 1) return 0;
    if (dim == 1) {
        Rational lo = points.front()(0), hi = points.front()(0);
        for (const auto& p : points) {
            if (p(0) < lo) lo = p(0);
            if (p(0) > hi) hi = p(0);
        }
        return hi - lo;
    }
    if (dim == 2) return polygon_area(points);

    // Enumerate supporting hyperplanes spanned by dim points with everything
    // on one side, then sum pyramid volumes from a base point, recursing into
    // the facet projected along a nonzero normal coordinate (the metric
    // factors cancel, keeping everything rational).
    std::map<FacetKey, std::pair<std::pair<RationalVec, Rational>, bool>> facets;
    std::vector<int> idx(dim);
    std::iota(idx.begin(), idx.end(), 0);
    RationalVec normal;
    Rational offset;
    while (true) {
        if (hyperplane_through(points, idx, dim, normal, offset)) {
            bool above = false, below = false;
            for (const auto& p : points) {
                Rational v = dot(normal, p);
                if (v > offset) above = true;
                else if (v < offset) below = true;
                if (above && below) break;
            }
            if (!(above && below)) {
                // canonical orientation: first nonzero normal entry positive
                RationalVec nn = normal;
                Rational oo = offset;
                for (Eigen::Index i = 0; i < nn.size(); ++i) {
                    if (nn(i) == 0) continue;
                    if (nn(i) < 0) {
                        for (Eigen::Index j = 0; j < nn.size(); ++j) nn(j) = -nn(j);
                        oo = -oo;
                    }
                    break;
                }
                facets.emplace(facet_key(nn, oo), std::make_pair(std::make_pair(nn, oo), true));
            }
        }
        int i = dim - 1;
        while (i >= 0 && idx[i] == m - dim + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int k = i + 1; k < dim; ++k) idx[k] = idx[k - 1] + 1;
    }

    const RationalVec& base = points.front();
    Rational vol = 0;
    for (const auto& [key, entry] : facets) {
        const RationalVec& fn = entry.first.first;
        const Rational& fo = entry.first.second;
        Rational height = dot(fn, base) - fo;
        if (height < 0) height = -height;
        if (height == 0) continue;
        int k = -1;
        for (Eigen::Index i = 0; i < fn.size(); ++i)
            if (fn(i) != 0) {
                k = static_cast<int>(i);
                break;
            }
        std::vector<RationalVec> proj;
        for (const auto& p : points)
            if (dot(fn, p) == fo) proj.push_back(drop_coordinate(p, k));
        Rational base_vol = polytope_volume(std::move(proj), dim - 1);
        Rational hk = fn(k) < 0 ? -fn(k) : fn(k);
        vol += height * base_vol / (hk * dim);
    }
    return vol;
}

ExtRational covolume(const NewtonPolyhedron& p) {
    if (!is_convenient(p)) return ExtRational::infinity();
    if (p.facets().empty()) return Rational(0);  // whole orthant
    const int n = p.dimension();
    const Rational m = max_axis_intercept(p);

    std::vector<Constraint> cs;
    for (const auto& f : p.facets()) cs.push_back({f.normal, f.offset, true});
    for (int k = 0; k < n; ++k) {
        RationalVec e = RationalVec::Zero(n);
        e(k) = 1;
        cs.push_back({e, Rational(0), true});
        cs.push_back({e, m, false});
    }
    std::vector<RationalVec> verts = region_vertices(n, cs);
    Rational inside = polytope_volume(std::move(verts), n);
    return pow_rational(m, n) - inside;
}

} // namespace tropinv
