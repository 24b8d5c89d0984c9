#ifndef BRT_FINCAT_HPP
#define BRT_FINCAT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace brt {

// A finite category given by explicit tables. Objects and morphisms are
// dense integer ids; composition is total on composable pairs.
struct FinCategory {
    struct Mor {
        int src = -1;
        int tgt = -1;
        std::string name;
    };

    int n_objects = 0;
    std::vector<std::string> object_names;  // optional, size n_objects or empty
    std::vector<Mor> morphisms;
    std::vector<int> identity;  // object -> morphism id
    // compose_table[g * n_mor + f] = id of g∘f when src(g) == tgt(f), else -1.
    std::vector<int> compose_table;

    int n_mor() const { return static_cast<int>(morphisms.size()); }
    int src(int m) const { return morphisms[m].src; }
    int tgt(int m) const { return morphisms[m].tgt; }

    // g after f; f: x -> y, g: y -> z, result x -> z.
    int compose(int g, int f) const { return compose_table[static_cast<size_t>(g) * morphisms.size() + f]; }
    void set_compose(int g, int f, int gf) { compose_table[static_cast<size_t>(g) * morphisms.size() + f] = gf; }

    std::vector<int> hom(int x, int y) const;  // sorted morphism ids x -> y

    std::string object_name(int x) const;
    std::string morphism_name(int m) const;
};

using FinCategoryPtr = std::shared_ptr<const FinCategory>;

// A functor between finite categories, as explicit tables.
struct CatFunctor {
    FinCategoryPtr domain;
    FinCategoryPtr codomain;
    std::vector<int> object_map;
    std::vector<int> morphism_map;

    int ob(int x) const { return object_map[x]; }
    int mor(int m) const { return morphism_map[m]; }
};

CatFunctor identity_functor(const FinCategoryPtr& c);
CatFunctor compose_functors(const CatFunctor& g, const CatFunctor& f);  // g∘f
bool functors_equal(const CatFunctor& f, const CatFunctor& g);

// Structural and law check. Empty report iff the tables describe a category.
// Structural errors (dangling ids, bad shapes) are prefixed "structure:",
// law violations "law:".
std::vector<std::string> validate_category(const FinCategory& c);
std::vector<std::string> validate_functor(const CatFunctor& f);

// One object, morphisms = group elements, composition = the given table.
// table[g][h] = g*h. Throws std::invalid_argument if the table is not a group.
FinCategory delooping(const std::vector<std::vector<int>>& table,
                      const std::vector<std::string>& element_names = {});

enum class CommaDirection { Under, Over };

// Comma category of a functor F: X -> Z relative to z0 in Z.
//   Over:  objects (x, u: F(x) -> z0)
//   Under: objects (x, u: z0 -> F(x))
// Morphisms (x,u) -> (x',u') are t: x -> x' making the triangle commute
// (Over: u'∘F(t) = u; Under: F(t)∘u = u').
struct CommaCategory {
    FinCategory cat;
    std::vector<std::pair<int, int>> object_labels;    // (x, u)
    std::vector<int> morphism_labels;                  // underlying X-morphism
    CatFunctor projection;                             // forgets u

    std::optional<int> object_index(int x, int u) const;
};

CommaCategory comma_category(const CatFunctor& f, int z0, CommaDirection dir);

std::vector<int> initial_objects(const FinCategory& c);
// Equivalence classes of objects under the zig-zag relation, each sorted,
// ordered by smallest member.
std::vector<std::vector<int>> connected_components(const FinCategory& c);

bool categories_equal(const FinCategory& a, const FinCategory& b);

}  // namespace brt

#endif
