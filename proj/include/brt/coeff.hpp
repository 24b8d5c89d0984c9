#ifndef BRT_COEFF_HPP
#define BRT_COEFF_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "brt/fincat.hpp"

namespace brt {

using Rat = boost::multiprecision::cpp_rational;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultBudget = 1'000'000;

// The scalar field of the Vect coefficient category: a prime field F_p or
// the rationals. Set-kind objects ignore the field.
struct Field {
    bool rational = true;
    std::int64_t p = 0;

    bool operator==(const Field& o) const {
        return rational == o.rational && (rational || p == o.p);
    }
    std::string describe() const { return rational ? "Q" : "F" + std::to_string(p); }
};

Field field_q();
Field field_fp(std::int64_t p);  // throws unless p prime

enum class CoeffKind { Set, Vect };

// Objects are skeletal: a finite set is its cardinality, a vector space its
// dimension over the field. This makes every equality of objects and
// morphisms an exact table comparison.
struct CoeffObject {
    CoeffKind kind = CoeffKind::Set;
    int n = 0;  // cardinality or dimension
    Field field;

    bool operator==(const CoeffObject& o) const {
        return kind == o.kind && n == o.n && (kind == CoeffKind::Set || field == o.field);
    }
    bool operator!=(const CoeffObject& o) const { return !(*this == o); }
};

CoeffObject set_object(int n);
CoeffObject vect_object(int dim, Field f);

// Exact matrix over a Field; F_p entries live in zp (reduced to [0,p)),
// rational entries in q. Row-major.
struct Mat {
    int rows = 0, cols = 0;
    Field field;
    std::vector<std::int64_t> zp;
    std::vector<Rat> q;

    static Mat zero(int rows, int cols, Field f);
    static Mat eye(int n, Field f);

    Rat get(int r, int c) const;
    void set(int r, int c, const Rat& v);
    void set_int(int r, int c, std::int64_t v);

    bool operator==(const Mat& o) const;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, const Rat& s);
Mat mat_hcat(const Mat& a, const Mat& b);
Mat mat_vcat(const Mat& a, const Mat& b);
int mat_rank(const Mat& a);
Mat mat_inverse(const Mat& a);               // throws if singular
std::vector<Mat> mat_kernel_basis(const Mat& a);  // columns spanning ker, deterministic
// Solve a x = b for one solution; empty optional-like via bool flag.
bool mat_solve(const Mat& a, const Mat& b, Mat& x);

struct CoeffMorphism {
    CoeffObject src, tgt;
    std::vector<int> map;  // Set: element mapping, size src.n, values in [0,tgt.n)
    Mat mat;               // Vect: tgt.n x src.n

    bool operator==(const CoeffMorphism& o) const;
    bool operator!=(const CoeffMorphism& o) const { return !(*this == o); }
};

CoeffMorphism coeff_identity(const CoeffObject& x);
CoeffMorphism coeff_compose(const CoeffMorphism& g, const CoeffMorphism& f);  // g∘f
CoeffMorphism set_morphism(const CoeffObject& src, const CoeffObject& tgt, std::vector<int> map);
CoeffMorphism vect_morphism(const CoeffObject& src, const CoeffObject& tgt, Mat m);
CoeffMorphism coeff_inverse(const CoeffMorphism& f);  // throws if not iso

bool is_epi(const CoeffMorphism& f);
bool is_mono(const CoeffMorphism& f);
bool is_iso(const CoeffMorphism& f);

// All morphisms X -> Y (Set, complete enumeration in lexicographic order) or
// the matrix-unit basis of Hom(X,Y) (Vect). Throws BudgetExceeded rather than
// truncating.
std::vector<CoeffMorphism> hom_set(const CoeffObject& x, const CoeffObject& y,
                                   std::int64_t budget = kDefaultBudget);

struct IdempotentSplitting {
    CoeffObject image;
    CoeffMorphism iota;  // image -> X, mono
    CoeffMorphism pi;    // X -> image, epi;  iota∘pi = e, pi∘iota = id
};
IdempotentSplitting split_idempotent(const CoeffMorphism& e);  // throws if e∘e != e

// Free/forgetful pair between Set and Vect over a fixed field.
CoeffObject free_object(const CoeffObject& s, Field f);
CoeffMorphism linearize_map(const CoeffMorphism& f, Field field);  // L on morphisms
CoeffObject underlying_set(const CoeffObject& v, std::int64_t budget = kDefaultBudget);
// Enumeration of a finite-field vector space: element k as a column vector.
Mat vect_element(const CoeffObject& v, std::int64_t k);

// A functorial assignment of coefficient data to a finite shape. kind/field
// are carried explicitly so empty shapes still have a well-typed colimit.
struct Diagram {
    FinCategoryPtr shape;
    CoeffKind kind = CoeffKind::Set;
    Field field;
    std::vector<CoeffObject> ob;    // per shape object
    std::vector<CoeffMorphism> mor;  // per shape morphism
};

std::vector<std::string> validate_diagram(const Diagram& d);

// Colimit with retained factoring data. Deterministic: Set classes are
// canonicalized by smallest global element index, Vect quotients by reduced
// row echelon pivots.
struct ColimitResult {
    CoeffObject obj;
    std::vector<CoeffMorphism> cocone;  // per diagram object

    // Mediating morphism for a competing cocone (not checked to be a cocone;
    // the caller owns that invariant).
    CoeffMorphism factor(const std::vector<CoeffMorphism>& legs, const CoeffObject& target) const;

    CoeffKind kind = CoeffKind::Set;
    std::vector<std::pair<int, int>> reps;  // Set: class -> (object, element)
    Mat section;                            // Vect: obj -> direct sum, right inverse of quotient
    std::vector<int> offsets;               // block offsets in the direct sum
};

ColimitResult colimit(const Diagram& d);

std::string coeff_describe(const CoeffObject& x);

}  // namespace brt

#endif
