#ifndef COGREY_COMPOSITION_HPP
#define COGREY_COMPOSITION_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace cogrey {

/// A D-part composition: strictly positive shares summing to one.
/// All operations return freshly closed values, so instances stay on the
/// simplex no matter how many perturbations/powers are chained.
class Composition {
public:
    Composition() = default;

    /// Validating constructor: parts must be strictly positive and sum to 1
    /// within 1e-9. Use closure() to build from unnormalized data.
    explicit Composition(std::vector<double> parts);

    std::size_t size() const { return parts_.size(); }
    double operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<double>& parts() const { return parts_; }

    /// Centered log-ratio image: log(x_i) - mean_j log(x_j).
    std::vector<double> clr() const;

private:
    friend Composition closure(const std::vector<double>&);
    friend Composition composition_from_log(const std::vector<double>&);
    struct unchecked_tag {};
    Composition(std::vector<double> parts, unchecked_tag) : parts_(std::move(parts)) {}

    std::vector<double> parts_;
};

/// Normalize a positive vector to unit sum.
Composition closure(const std::vector<double>& v);

/// Replace entries below `floor` (notably exact zeros) with `floor`.
/// Negative entries are not repaired and will fail closure.
std::vector<double> floor_zeros(std::vector<double> v, double floor = 1e-6);

/// Build a composition from per-part logs (defined up to an additive
/// constant). Shifts by the max before exponentiating so extreme log ranges
/// stay finite.
Composition composition_from_log(const std::vector<double>& logs);

/// The identity of perturbation: all parts equal 1/D.
Composition uniform(std::size_t d);

/// Componentwise product (quotient when inverse) followed by closure.
Composition perturb(const Composition& x, const Composition& y, bool inverse = false);

/// Componentwise a-th power followed by closure.
Composition power(double a, const Composition& x);

/// Aitchison inner product: sum of products of clr coordinates.
double inner_product(const Composition& x, const Composition& y);

/// Aitchison norm and distance.
double norm(const Composition& x);
double distance(const Composition& x, const Composition& y);

/// Time-ordered rows of equal-dimension compositions. `labels` (one per
/// row) and `names` (one per part) are optional annotations; empty means
/// unannotated.
class CompositionSeries {
public:
    CompositionSeries() = default;
    explicit CompositionSeries(std::vector<Composition> rows,
                               std::vector<std::string> labels = {},
                               std::vector<std::string> names = {});

    std::size_t size() const { return rows_.size(); }
    std::size_t parts() const { return rows_.empty() ? 0 : rows_.front().size(); }
    const Composition& operator[](std::size_t i) const { return rows_[i]; }
    const std::vector<Composition>& rows() const { return rows_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<Composition> rows_;
    std::vector<std::string> labels_;
    std::vector<std::string> names_;
};

/// Sum of rowwise inner products.
double series_inner_product(const CompositionSeries& x, const CompositionSeries& y);

/// Closure of the columnwise geometric means.
Composition center(const CompositionSeries& x);

/// Each row perturbed by the inverse of center(x); the result centers at
/// uniform.
CompositionSeries centralize(const CompositionSeries& x);

/// Each row perturbed by c (inverse of centralize when c = center(x)).
CompositionSeries decentralize(const CompositionSeries& x, const Composition& c);

}  // namespace cogrey

#endif
