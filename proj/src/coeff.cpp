#include "brt/coeff.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace brt {

Field field_q() { return Field{true, 0}; }

Field field_fp(std::int64_t p) {
    if (p < 2) throw std::invalid_argument("field_fp: p must be prime");
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("field_fp: p must be prime");
    return Field{false, p};
}

CoeffObject set_object(int n) {
    if (n < 0) throw std::invalid_argument("set_object: negative size");
    return CoeffObject{CoeffKind::Set, n, Field{}};
}

CoeffObject vect_object(int dim, Field f) {
    if (dim < 0) throw std::invalid_argument("vect_object: negative dimension");
    return CoeffObject{CoeffKind::Vect, dim, f};
}

// ---- field arithmetic -------------------------------------------------

namespace {

std::int64_t fp_norm(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

std::int64_t fp_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t fp_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    a = fp_norm(a, p);
    while (e > 0) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
    a = fp_norm(a, p);
    if (a == 0) throw std::domain_error("fp_inv: zero");
    return fp_pow(a, p - 2, p);
}

// In-place reduced row echelon form; returns pivot columns in order.
template <class T, class Sub, class Mul, class Inv, class IsZero>
std::vector<int> rref_inplace(std::vector<T>& a, int rows, int cols, Sub sub, Mul mul, Inv inv,
                              IsZero is_zero) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(a[static_cast<size_t>(i) * cols + c])) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j)
                std::swap(a[static_cast<size_t>(pr) * cols + j], a[static_cast<size_t>(r) * cols + j]);
        T lead_inv = inv(a[static_cast<size_t>(r) * cols + c]);
        for (int j = c; j < cols; ++j)
            a[static_cast<size_t>(r) * cols + j] = mul(a[static_cast<size_t>(r) * cols + j], lead_inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            T f = a[static_cast<size_t>(i) * cols + c];
            if (is_zero(f)) continue;
            for (int j = c; j < cols; ++j)
                a[static_cast<size_t>(i) * cols + j] =
                    sub(a[static_cast<size_t>(i) * cols + j],
                        mul(f, a[static_cast<size_t>(r) * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

struct Echelon {
    Mat m;                    // rref of the input
    std::vector<int> pivots;  // pivot columns
};

Echelon echelon(const Mat& in) {
    Echelon e;
    e.m = in;
    if (in.field.rational) {
        e.pivots = rref_inplace<Rat>(
            e.m.q, in.rows, in.cols, [](const Rat& x, const Rat& y) { return Rat(x - y); },
            [](const Rat& x, const Rat& y) { return Rat(x * y); },
            [](const Rat& x) { return Rat(1 / x); }, [](const Rat& x) { return x == 0; });
    } else {
        std::int64_t p = in.field.p;
        e.pivots = rref_inplace<std::int64_t>(
            e.m.zp, in.rows, in.cols,
            [p](std::int64_t x, std::int64_t y) { return fp_norm(x - y, p); },
            [p](std::int64_t x, std::int64_t y) { return fp_mul(x, y, p); },
            [p](std::int64_t x) { return fp_inv(x, p); },
            [](std::int64_t x) { return x == 0; });
    }
    return e;
}

}  // namespace

// ---- Mat ----------------------------------------------------------------

Mat Mat::zero(int rows, int cols, Field f) {
    Mat m;
    m.rows = rows;
    m.cols = cols;
    m.field = f;
    if (f.rational)
        m.q.assign(static_cast<size_t>(rows) * cols, Rat(0));
    else
        m.zp.assign(static_cast<size_t>(rows) * cols, 0);
    return m;
}

Mat Mat::eye(int n, Field f) {
    Mat m = zero(n, n, f);
    for (int i = 0; i < n; ++i) m.set_int(i, i, 1);
    return m;
}

Rat Mat::get(int r, int c) const {
    size_t i = static_cast<size_t>(r) * cols + c;
    return field.rational ? q[i] : Rat(zp[i]);
}

void Mat::set(int r, int c, const Rat& v) {
    size_t i = static_cast<size_t>(r) * cols + c;
    if (field.rational) {
        q[i] = v;
    } else {
        boost::multiprecision::cpp_int num = boost::multiprecision::numerator(v);
        boost::multiprecision::cpp_int den = boost::multiprecision::denominator(v);
        std::int64_t n = fp_norm(static_cast<std::int64_t>(num % field.p), field.p);
        std::int64_t d = fp_norm(static_cast<std::int64_t>(den % field.p), field.p);
        zp[i] = fp_mul(n, fp_inv(d, field.p), field.p);
    }
}

void Mat::set_int(int r, int c, std::int64_t v) {
    size_t i = static_cast<size_t>(r) * cols + c;
    if (field.rational)
        q[i] = Rat(v);
    else
        zp[i] = fp_norm(v, field.p);
}

bool Mat::operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && field == o.field && zp == o.zp && q == o.q;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols != b.rows || !(a.field == b.field)) throw std::invalid_argument("mat_mul: shape/field mismatch");
    Mat c = Mat::zero(a.rows, b.cols, a.field);
    if (a.field.rational) {
        for (int i = 0; i < a.rows; ++i)
            for (int k = 0; k < a.cols; ++k) {
                const Rat& v = a.q[static_cast<size_t>(i) * a.cols + k];
                if (v == 0) continue;
                for (int j = 0; j < b.cols; ++j)
                    c.q[static_cast<size_t>(i) * c.cols + j] += v * b.q[static_cast<size_t>(k) * b.cols + j];
            }
    } else {
        std::int64_t p = a.field.p;
        for (int i = 0; i < a.rows; ++i)
            for (int k = 0; k < a.cols; ++k) {
                std::int64_t v = a.zp[static_cast<size_t>(i) * a.cols + k];
                if (v == 0) continue;
                for (int j = 0; j < b.cols; ++j) {
                    auto& dst = c.zp[static_cast<size_t>(i) * c.cols + j];
                    dst = fp_norm(dst + fp_mul(v, b.zp[static_cast<size_t>(k) * b.cols + j], p), p);
                }
            }
    }
    return c;
}

Mat mat_add(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || a.cols != b.cols || !(a.field == b.field))
        throw std::invalid_argument("mat_add: shape/field mismatch");
    Mat c = a;
    if (a.field.rational)
        for (size_t i = 0; i < c.q.size(); ++i) c.q[i] += b.q[i];
    else
        for (size_t i = 0; i < c.zp.size(); ++i) c.zp[i] = fp_norm(c.zp[i] + b.zp[i], a.field.p);
    return c;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || a.cols != b.cols || !(a.field == b.field))
        throw std::invalid_argument("mat_sub: shape/field mismatch");
    Mat c = a;
    if (a.field.rational)
        for (size_t i = 0; i < c.q.size(); ++i) c.q[i] -= b.q[i];
    else
        for (size_t i = 0; i < c.zp.size(); ++i) c.zp[i] = fp_norm(c.zp[i] - b.zp[i], a.field.p);
    return c;
}

Mat mat_scale(const Mat& a, const Rat& s) {
    Mat c = a;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) c.set(i, j, a.get(i, j) * s);
    return c;
}

Mat mat_hcat(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || !(a.field == b.field)) throw std::invalid_argument("mat_hcat: mismatch");
    Mat c = Mat::zero(a.rows, a.cols + b.cols, a.field);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) c.set(i, j, a.get(i, j));
        for (int j = 0; j < b.cols; ++j) c.set(i, a.cols + j, b.get(i, j));
    }
    return c;
}

Mat mat_vcat(const Mat& a, const Mat& b) {
    if (a.cols != b.cols || !(a.field == b.field)) throw std::invalid_argument("mat_vcat: mismatch");
    Mat c = Mat::zero(a.rows + b.rows, a.cols, a.field);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) c.set(i, j, a.get(i, j));
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < a.cols; ++j) c.set(a.rows + i, j, b.get(i, j));
    return c;
}

int mat_rank(const Mat& a) { return static_cast<int>(echelon(a).pivots.size()); }

Mat mat_inverse(const Mat& a) {
    if (a.rows != a.cols) throw std::invalid_argument("mat_inverse: not square");
    Echelon e = echelon(mat_hcat(a, Mat::eye(a.rows, a.field)));
    if (static_cast<int>(e.pivots.size()) != a.rows ||
        (a.rows > 0 && e.pivots.back() >= a.rows))
        throw std::invalid_argument("mat_inverse: singular");
    Mat inv = Mat::zero(a.rows, a.rows, a.field);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.rows; ++j) inv.set(i, j, e.m.get(i, a.rows + j));
    return inv;
}

std::vector<Mat> mat_kernel_basis(const Mat& a) {
    Echelon e = echelon(a);
    std::vector<bool> is_pivot(a.cols, false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<Mat> basis;
    for (int c = 0; c < a.cols; ++c) {
        if (is_pivot[c]) continue;
        Mat v = Mat::zero(a.cols, 1, a.field);
        v.set_int(c, 0, 1);
        for (int r = 0; r < static_cast<int>(e.pivots.size()); ++r)
            v.set(e.pivots[r], 0, -e.m.get(r, c));
        basis.push_back(std::move(v));
    }
    return basis;
}

bool mat_solve(const Mat& a, const Mat& b, Mat& x) {
    if (a.rows != b.rows || !(a.field == b.field)) throw std::invalid_argument("mat_solve: mismatch");
    Echelon e = echelon(mat_hcat(a, b));
    for (int c : e.pivots)
        if (c >= a.cols) return false;  // inconsistent system
    x = Mat::zero(a.cols, b.cols, a.field);
    for (int r = 0; r < static_cast<int>(e.pivots.size()); ++r)
        for (int j = 0; j < b.cols; ++j) x.set(e.pivots[r], j, e.m.get(r, a.cols + j));
    return true;
}

// ---- CoeffMorphism ------------------------------------------------------

bool CoeffMorphism::operator==(const CoeffMorphism& o) const {
    return src == o.src && tgt == o.tgt && map == o.map && mat == o.mat;
}

CoeffMorphism coeff_identity(const CoeffObject& x) {
    CoeffMorphism f;
    f.src = f.tgt = x;
    if (x.kind == CoeffKind::Set) {
        f.map.resize(x.n);
        std::iota(f.map.begin(), f.map.end(), 0);
    } else {
        f.mat = Mat::eye(x.n, x.field);
    }
    return f;
}

CoeffMorphism set_morphism(const CoeffObject& src, const CoeffObject& tgt, std::vector<int> map) {
    if (src.kind != CoeffKind::Set || tgt.kind != CoeffKind::Set)
        throw std::invalid_argument("set_morphism: objects not Set-kind");
    if (static_cast<int>(map.size()) != src.n) throw std::invalid_argument("set_morphism: map not total");
    for (int v : map)
        if (v < 0 || v >= tgt.n) throw std::invalid_argument("set_morphism: value outside target");
    CoeffMorphism f;
    f.src = src;
    f.tgt = tgt;
    f.map = std::move(map);
    return f;
}

CoeffMorphism vect_morphism(const CoeffObject& src, const CoeffObject& tgt, Mat m) {
    if (src.kind != CoeffKind::Vect || tgt.kind != CoeffKind::Vect || !(src.field == tgt.field))
        throw std::invalid_argument("vect_morphism: objects not Vect-kind over one field");
    if (m.rows != tgt.n || m.cols != src.n || !(m.field == src.field))
        throw std::invalid_argument("vect_morphism: matrix shape/field mismatch");
    CoeffMorphism f;
    f.src = src;
    f.tgt = tgt;
    f.mat = std::move(m);
    return f;
}

CoeffMorphism coeff_compose(const CoeffMorphism& g, const CoeffMorphism& f) {
    if (f.tgt != g.src) throw std::invalid_argument("coeff_compose: not composable");
    CoeffMorphism h;
    h.src = f.src;
    h.tgt = g.tgt;
    if (f.src.kind == CoeffKind::Set) {
        h.map.resize(f.map.size());
        for (size_t i = 0; i < f.map.size(); ++i) h.map[i] = g.map[f.map[i]];
    } else {
        h.mat = mat_mul(g.mat, f.mat);
    }
    return h;
}

CoeffMorphism coeff_inverse(const CoeffMorphism& f) {
    if (!is_iso(f)) throw std::invalid_argument("coeff_inverse: not an isomorphism");
    CoeffMorphism g;
    g.src = f.tgt;
    g.tgt = f.src;
    if (f.src.kind == CoeffKind::Set) {
        g.map.assign(f.tgt.n, -1);
        for (int i = 0; i < f.src.n; ++i) g.map[f.map[i]] = i;
    } else {
        g.mat = mat_inverse(f.mat);
    }
    return g;
}

bool is_epi(const CoeffMorphism& f) {
    if (f.src.kind == CoeffKind::Set) {
        std::vector<bool> hit(f.tgt.n, false);
        for (int v : f.map) hit[v] = true;
        return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }
    return mat_rank(f.mat) == f.tgt.n;
}

bool is_mono(const CoeffMorphism& f) {
    if (f.src.kind == CoeffKind::Set) {
        std::vector<bool> hit(f.tgt.n, false);
        for (int v : f.map) {
            if (hit[v]) return false;
            hit[v] = true;
        }
        return true;
    }
    return mat_rank(f.mat) == f.src.n;
}

bool is_iso(const CoeffMorphism& f) { return is_epi(f) && is_mono(f); }

std::vector<CoeffMorphism> hom_set(const CoeffObject& x, const CoeffObject& y, std::int64_t budget) {
    std::vector<CoeffMorphism> out;
    if (x.kind == CoeffKind::Set) {
        if (y.kind != CoeffKind::Set) throw std::invalid_argument("hom_set: mixed kinds");
        // |y|^|x| candidates
        double count = 1;
        for (int i = 0; i < x.n; ++i) {
            count *= y.n;
            if (count > static_cast<double>(budget))
                throw BudgetExceeded("hom_set: too large (" + std::to_string(y.n) + "^" +
                                     std::to_string(x.n) + ")");
        }
        if (x.n == 0) {
            out.push_back(set_morphism(x, y, {}));
            return out;
        }
        if (y.n == 0) return out;  // no maps into the empty set
        std::vector<int> map(x.n, 0);
        while (true) {
            out.push_back(set_morphism(x, y, map));
            int i = x.n - 1;
            while (i >= 0 && map[i] == y.n - 1) map[i--] = 0;
            if (i < 0) break;
            ++map[i];
        }
        return out;
    }
    if (y.kind != CoeffKind::Vect || !(x.field == y.field))
        throw std::invalid_argument("hom_set: mixed kinds or fields");
    for (int i = 0; i < y.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            Mat m = Mat::zero(y.n, x.n, x.field);
            m.set_int(i, j, 1);
            out.push_back(vect_morphism(x, y, std::move(m)));
        }
    return out;
}

IdempotentSplitting split_idempotent(const CoeffMorphism& e) {
    if (e.src != e.tgt || coeff_compose(e, e) != e)
        throw std::invalid_argument("split_idempotent: not an idempotent endomorphism");
    IdempotentSplitting s;
    if (e.src.kind == CoeffKind::Set) {
        std::vector<int> fixed;
        for (int i = 0; i < e.src.n; ++i)
            if (e.map[i] == i) fixed.push_back(i);
        s.image = set_object(static_cast<int>(fixed.size()));
        std::vector<int> idx(e.src.n, -1);
        for (int k = 0; k < static_cast<int>(fixed.size()); ++k) idx[fixed[k]] = k;
        s.iota = set_morphism(s.image, e.src, fixed);
        std::vector<int> pi(e.src.n);
        for (int i = 0; i < e.src.n; ++i) pi[i] = idx[e.map[i]];
        s.pi = set_morphism(e.src, s.image, std::move(pi));
    } else {
        // column space basis: pivot columns of e
        Echelon ech = echelon(e.mat);
        int r = static_cast<int>(ech.pivots.size());
        s.image = vect_object(r, e.src.field);
        Mat iota = Mat::zero(e.src.n, r, e.src.field);
        for (int k = 0; k < r; ++k)
            for (int i = 0; i < e.src.n; ++i) iota.set(i, k, e.mat.get(i, ech.pivots[k]));
        // pi: solve iota * pi = e (exact since e factors through its image)
        Mat pi;
        if (!mat_solve(iota, e.mat, pi)) throw std::logic_error("split_idempotent: factorization failed");
        s.iota = vect_morphism(s.image, e.src, std::move(iota));
        s.pi = vect_morphism(e.src, s.image, std::move(pi));
    }
    if (!(coeff_compose(s.iota, s.pi) == e) ||
        !(coeff_compose(s.pi, s.iota) == coeff_identity(s.image)))
        throw std::logic_error("split_idempotent: postcondition failed");
    return s;
}

CoeffObject free_object(const CoeffObject& s, Field f) {
    if (s.kind != CoeffKind::Set) throw std::invalid_argument("free_object: expects a Set object");
    return vect_object(s.n, f);
}

CoeffMorphism linearize_map(const CoeffMorphism& f, Field field) {
    if (f.src.kind != CoeffKind::Set) throw std::invalid_argument("linearize_map: expects a Set morphism");
    Mat m = Mat::zero(f.tgt.n, f.src.n, field);
    for (int j = 0; j < f.src.n; ++j) m.set_int(f.map[j], j, 1);
    return vect_morphism(free_object(f.src, field), free_object(f.tgt, field), std::move(m));
}

CoeffObject underlying_set(const CoeffObject& v, std::int64_t budget) {
    if (v.kind != CoeffKind::Vect) throw std::invalid_argument("underlying_set: expects a Vect object");
    if (v.field.rational) throw std::invalid_argument("underlying_set: not enumerable over Q");
    std::int64_t count = 1;
    for (int i = 0; i < v.n; ++i) {
        count *= v.field.p;
        if (count > budget) throw BudgetExceeded("underlying_set: too large");
    }
    return set_object(static_cast<int>(count));
}

Mat vect_element(const CoeffObject& v, std::int64_t k) {
    if (v.kind != CoeffKind::Vect || v.field.rational)
        throw std::invalid_argument("vect_element: expects a finite-field Vect object");
    Mat col = Mat::zero(v.n, 1, v.field);
    for (int i = 0; i < v.n; ++i) {
        col.set_int(i, 0, k % v.field.p);
        k /= v.field.p;
    }
    return col;
}

// ---- diagrams and colimits ----------------------------------------------

std::vector<std::string> validate_diagram(const Diagram& d) {
    std::vector<std::string> report;
    const FinCategory& s = *d.shape;
    if (static_cast<int>(d.ob.size()) != s.n_objects || static_cast<int>(d.mor.size()) != s.n_mor()) {
        report.push_back("structure: value tables have wrong size");
        return report;
    }
    for (int x = 0; x < s.n_objects; ++x)
        if (d.ob[x].kind != d.kind || (d.kind == CoeffKind::Vect && !(d.ob[x].field == d.field)))
            report.push_back("structure: object value " + std::to_string(x) + " has wrong kind/field");
    for (int m = 0; m < s.n_mor(); ++m)
        if (d.mor[m].src != d.ob[s.src(m)] || d.mor[m].tgt != d.ob[s.tgt(m)])
            report.push_back("structure: morphism value " + std::to_string(m) + " has wrong endpoints");
    if (!report.empty()) return report;
    for (int x = 0; x < s.n_objects; ++x)
        if (d.mor[s.identity[x]] != coeff_identity(d.ob[x]))
            report.push_back("law: identity of object " + std::to_string(x) + " not mapped to identity");
    for (int g = 0; g < s.n_mor(); ++g)
        for (int f = 0; f < s.n_mor(); ++f) {
            if (s.src(g) != s.tgt(f)) continue;
            if (d.mor[s.compose(g, f)] != coeff_compose(d.mor[g], d.mor[f]))
                report.push_back("law: functoriality fails on (" + std::to_string(g) + "," +
                                 std::to_string(f) + ")");
        }
    return report;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);  // smallest id is canonical
    }
};

}  // namespace

ColimitResult colimit(const Diagram& d) {
    auto bad = validate_diagram(d);
    if (!bad.empty()) throw std::invalid_argument("colimit: non-functorial diagram: " + bad.front());
    const FinCategory& s = *d.shape;
    ColimitResult res;
    std::vector<int> offsets(s.n_objects + 1, 0);
    for (int x = 0; x < s.n_objects; ++x) offsets[x + 1] = offsets[x] + d.ob[x].n;
    const int total = offsets.back();
    res.offsets = offsets;

    CoeffKind kind = d.kind;
    res.kind = kind;

    if (kind == CoeffKind::Set) {
        UnionFind uf(total);
        for (int m = 0; m < s.n_mor(); ++m) {
            int x = s.src(m), y = s.tgt(m);
            for (int e = 0; e < d.ob[x].n; ++e) uf.join(offsets[x] + e, offsets[y] + d.mor[m].map[e]);
        }
        std::map<int, int> class_index;  // canonical root -> class id, in root order
        for (int g = 0; g < total; ++g) class_index.emplace(uf.find(g), 0);
        int k = 0;
        for (auto& [root, idx] : class_index) idx = k++;
        res.obj = set_object(k);
        res.reps.resize(k);
        for (auto& [root, idx] : class_index) {
            int x = static_cast<int>(std::upper_bound(offsets.begin(), offsets.end(), root) -
                                     offsets.begin()) - 1;
            res.reps[idx] = {x, root - offsets[x]};
        }
        for (int x = 0; x < s.n_objects; ++x) {
            std::vector<int> leg(d.ob[x].n);
            for (int e = 0; e < d.ob[x].n; ++e) leg[e] = class_index.at(uf.find(offsets[x] + e));
            res.cocone.push_back(set_morphism(d.ob[x], res.obj, std::move(leg)));
        }
        return res;
    }

    // Vect: quotient of the direct sum by the span of the gluing relations.
    Field f = d.field;
    int n_rel = 0;
    for (int m = 0; m < s.n_mor(); ++m) n_rel += d.ob[s.src(m)].n;
    Mat rel = Mat::zero(n_rel, total, f);
    int row = 0;
    for (int m = 0; m < s.n_mor(); ++m) {
        int x = s.src(m), y = s.tgt(m);
        for (int e = 0; e < d.ob[x].n; ++e, ++row) {
            rel.set_int(row, offsets[x] + e, -1);
            for (int i = 0; i < d.ob[y].n; ++i) {
                Rat v = d.mor[m].mat.get(i, e);
                if (v != 0) rel.set(row, offsets[y] + i, rel.get(row, offsets[y] + i) + v);
            }
        }
    }
    Echelon ech = echelon(rel);
    std::vector<bool> is_pivot(total, false);
    for (int c : ech.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < total; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    const int dim = static_cast<int>(free_cols.size());
    res.obj = vect_object(dim, f);

    // quotient map Q: direct sum -> colimit
    Mat quot = Mat::zero(dim, total, f);
    for (int j = 0; j < dim; ++j) quot.set_int(j, free_cols[j], 1);
    for (int r = 0; r < static_cast<int>(ech.pivots.size()); ++r)
        for (int j = 0; j < dim; ++j) quot.set(j, ech.pivots[r], -ech.m.get(r, free_cols[j]));
    res.section = Mat::zero(total, dim, f);
    for (int j = 0; j < dim; ++j) res.section.set_int(free_cols[j], j, 1);

    for (int x = 0; x < s.n_objects; ++x) {
        Mat leg = Mat::zero(dim, d.ob[x].n, f);
        for (int i = 0; i < dim; ++i)
            for (int e = 0; e < d.ob[x].n; ++e) leg.set(i, e, quot.get(i, offsets[x] + e));
        res.cocone.push_back(vect_morphism(d.ob[x], res.obj, std::move(leg)));
    }
    return res;
}

CoeffMorphism ColimitResult::factor(const std::vector<CoeffMorphism>& legs,
                                    const CoeffObject& target) const {
    if (legs.size() != cocone.size()) throw std::invalid_argument("factor: wrong number of legs");
    CoeffMorphism m;
    m.src = obj;
    m.tgt = target;
    if (kind == CoeffKind::Set) {
        m.map.resize(obj.n);
        for (int k = 0; k < obj.n; ++k) {
            auto [x, e] = reps[k];
            m.map[k] = legs[x].map[e];
        }
        return m;
    }
    const int total = offsets.back();
    Mat block = Mat::zero(target.n, total, target.field);
    for (int x = 0; x < static_cast<int>(legs.size()); ++x)
        for (int i = 0; i < target.n; ++i)
            for (int e = 0; e < legs[x].src.n; ++e) block.set(i, offsets[x] + e, legs[x].mat.get(i, e));
    m.mat = mat_mul(block, section);
    return m;
}

std::string coeff_describe(const CoeffObject& x) {
    if (x.kind == CoeffKind::Set) return "Set(" + std::to_string(x.n) + ")";
    return "Vect(" + std::to_string(x.n) + "," + x.field.describe() + ")";
}

}  // namespace brt
