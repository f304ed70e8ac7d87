#pragma once

#include "nlie/lin_comb.hpp"
#include "nlie/report.hpp"
#include "nlie/so_basis.hpp"
#include "nlie/uea.hpp"
#include "nlie/weight_poly.hpp"

#include <compare>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace nlie {

/// Oriented arc from point i to point j, stored with i < j.
struct Arc {
    int i = 1;
    int j = 2;
    auto operator<=>(const Arc&) const = default;
};

/// Arcs in product order; position k is the k-th factor.
using ArcWord = std::vector<Arc>;

enum class CrossingClass { Disjoint, Nested, SharedEndpoint, Crossing };

CrossingClass classify(const Arc& x, const Arc& y);
std::string to_string(CrossingClass c);

struct Diagram {
    int points = 0;
    ArcWord arcs;
    Scalar coeff{1};

    /// One line of point labels, then one line per arc in product order.
    std::string render() const;
};

/// Formal combination of arc diagrams over a fixed number of points.
class DiagramSum {
public:
    explicit DiagramSum(int points = 0) : points_(points) {}

    int points() const { return points_; }
    /// Arcs given as (from, to); reversed arcs flip the sign and loops vanish.
    void add_oriented(const std::vector<std::pair<int, int>>& oriented, const Scalar& c);
    void add(const ArcWord& w, const Scalar& c) { terms_.add(w, c); }

    bool is_zero() const { return terms_.is_zero(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    const LinComb<ArcWord, Scalar>& terms() const { return terms_; }
    std::vector<Diagram> diagrams() const;
    int max_degree() const;

    DiagramSum& operator+=(const DiagramSum& o);
    DiagramSum& operator-=(const DiagramSum& o);
    DiagramSum& operator*=(const Scalar& s);
    friend DiagramSum operator+(DiagramSum a, const DiagramSum& b) { return a += b; }
    friend DiagramSum operator-(DiagramSum a, const DiagramSum& b) { return a -= b; }
    friend DiagramSum operator*(DiagramSum a, const Scalar& s) { return a *= s; }
    /// Concatenation (overlay with the second diagram's factors shifted).
    friend DiagramSum operator*(const DiagramSum& a, const DiagramSum& b);
    bool operator==(const DiagramSum& o) const { return points_ == o.points_ && terms_ == o.terms_; }

    /// Complex conjugate of every coefficient.
    DiagramSum conj() const;
    std::string str() const;
    std::string render() const;

private:
    int points_;
    LinComb<ArcWord, Scalar> terms_;
};

DiagramSum arc(int points, int from, int to, const Scalar& c = Scalar(1));
DiagramSum unit_diagram(int points);

/// V-family labels are rewritten in the E basis first.
DiagramSum diagram_of(const SoAlgebra& alg, const UElt& u);
UElt monomial_of(const Diagram& d);
UElt monomial_of(const DiagramSum& d);

/// [e^{x}, e^{y}] read off the shared endpoints.
DiagramSum arc_commutator(int points, const Arc& x, const Arc& y);

bool is_sorted_word(const ArcWord& w);
bool is_noncrossing(const ArcWord& w);

/// Picks one of `options` candidate rewrites (options > 0).
using RewriteChooser = std::function<std::size_t(std::size_t options)>;
RewriteChooser random_chooser(std::mt19937_64& rng);

/// Sorted, non-crossing normal form modulo Q(A). Without a chooser, crossings are resolved before sorting.
DiagramSum normalize_diagram(const DiagramSum& d, const RewriteChooser& choose = {});

/// Number of sorted non-crossing words of the given degree; only degree 2 is supported.
long count_noncrossing(int n, int degree);
/// Sorted non-crossing words of any degree (no independent formula beyond degree 2).
long count_noncrossing_words(int n, int degree);

/// pr_lambda of the diagram acting on a highest weight vector: Cartan arcs (2m-1, 2m) act by -i lambda_m,
/// mixed arcs are leg-shifted into raising and lowering parts.
WeightPoly evaluate_on_highest_weight(const DiagramSum& d);

struct GraphicalRoute {
    int j = 1;
    int k = 2;
    WeightPoly first;   // (g1 + i g4)(g2 + i g3)
    WeightPoly second;  // (g2 - i g3)(g1 - i g4)
    WeightPoly total;
};

/// The two degree-2 products built from v_j ^ v_k and v_j ^ v_{-k}, normalized and evaluated on lambda.
GraphicalRoute graphical_route(int j, int k, int n);
WeightPoly graphical_classification_polynomial(int j, int k, int n);

Report check_graphical_route(int n);
Report check_diagram_calculus(int n, int strategies, std::uint64_t seed);

}  // namespace nlie
