#include "cogrey/composition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cogrey/errors.hpp"

namespace cogrey {

namespace {

constexpr double kSumTolerance = 1e-9;
// Keeps parts representable after extreme power chains; log of this is
// still finite, so downstream log-ratio math never sees -inf.
constexpr double kMinPart = 1e-300;

void check_same_size(const Composition& x, const Composition& y, const char* op) {
    if (x.size() != y.size()) {
        throw DimensionMismatch(std::string(op) + ": compositions have " +
                                std::to_string(x.size()) + " and " +
                                std::to_string(y.size()) + " parts");
    }
}

}  // namespace

Composition::Composition(std::vector<double> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 2) {
        throw DegenerateDimension("composition needs at least 2 parts");
    }
    double sum = 0.0;
    for (double p : parts_) {
        if (!(p > 0.0)) {
            throw NonPositivePart("composition part must be > 0");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw NonPositivePart("composition parts sum to " + std::to_string(sum) +
                              ", expected 1");
    }
}

std::vector<double> Composition::clr() const {
    std::vector<double> logs(parts_.size());
    double mean = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        logs[i] = std::log(parts_[i]);
        mean += logs[i];
    }
    mean /= static_cast<double>(parts_.size());
    for (double& v : logs) v -= mean;
    return logs;
}

Composition closure(const std::vector<double>& v) {
    if (v.size() < 2) {
        throw DegenerateDimension("closure needs at least 2 parts");
    }
    double sum = 0.0;
    for (double x : v) {
        if (!(x > 0.0)) {
            throw NonPositivePart("closure input must be strictly positive");
        }
        sum += x;
    }
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / sum;
    return Composition(std::move(out), Composition::unchecked_tag{});
}

std::vector<double> floor_zeros(std::vector<double> v, double floor) {
    for (double& x : v) {
        if (x >= 0.0 && x < floor) x = floor;
    }
    return v;
}

Composition composition_from_log(const std::vector<double>& logs) {
    if (logs.size() < 2) {
        throw DegenerateDimension("composition needs at least 2 parts");
    }
    const double top = *std::max_element(logs.begin(), logs.end());
    std::vector<double> parts(logs.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < logs.size(); ++i) {
        parts[i] = std::max(std::exp(logs[i] - top), kMinPart);
        sum += parts[i];
    }
    for (double& p : parts) p /= sum;
    return Composition(std::move(parts), Composition::unchecked_tag{});
}

Composition uniform(std::size_t d) {
    if (d < 2) {
        throw DegenerateDimension("uniform composition needs at least 2 parts");
    }
    return closure(std::vector<double>(d, 1.0));
}

Composition perturb(const Composition& x, const Composition& y, bool inverse) {
    check_same_size(x, y, "perturb");
    std::vector<double> logs(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double ly = std::log(y[i]);
        logs[i] = std::log(x[i]) + (inverse ? -ly : ly);
    }
    return composition_from_log(logs);
}

Composition power(double a, const Composition& x) {
    std::vector<double> logs(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) logs[i] = a * std::log(x[i]);
    return composition_from_log(logs);
}

double inner_product(const Composition& x, const Composition& y) {
    check_same_size(x, y, "inner_product");
    const std::vector<double> cx = x.clr();
    const std::vector<double> cy = y.clr();
    double sum = 0.0;
    for (std::size_t i = 0; i < cx.size(); ++i) sum += cx[i] * cy[i];
    return sum;
}

double norm(const Composition& x) { return std::sqrt(inner_product(x, x)); }

double distance(const Composition& x, const Composition& y) {
    return norm(perturb(x, y, /*inverse=*/true));
}

CompositionSeries::CompositionSeries(std::vector<Composition> rows,
                                     std::vector<std::string> labels,
                                     std::vector<std::string> names)
    : rows_(std::move(rows)), labels_(std::move(labels)), names_(std::move(names)) {
    for (const Composition& r : rows_) {
        if (r.size() != rows_.front().size()) {
            throw DimensionMismatch("series rows differ in part count");
        }
    }
    if (!labels_.empty() && labels_.size() != rows_.size()) {
        throw DimensionMismatch("series has " + std::to_string(rows_.size()) +
                                " rows but " + std::to_string(labels_.size()) + " labels");
    }
    if (!names_.empty() && !rows_.empty() && names_.size() != rows_.front().size()) {
        throw DimensionMismatch("series has " + std::to_string(rows_.front().size()) +
                                " parts but " + std::to_string(names_.size()) + " names");
    }
}

double series_inner_product(const CompositionSeries& x, const CompositionSeries& y) {
    if (x.size() != y.size() || x.parts() != y.parts()) {
        throw DimensionMismatch("series_inner_product: shapes differ");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += inner_product(x[i], y[i]);
    return sum;
}

Composition center(const CompositionSeries& x) {
    if (x.size() == 0) {
        throw DegenerateSeries("center of empty series");
    }
    const std::size_t d = x.parts();
    std::vector<double> mean_log(d, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) mean_log[j] += std::log(x[i][j]);
    }
    for (double& v : mean_log) v /= static_cast<double>(x.size());
    return composition_from_log(mean_log);
}

CompositionSeries centralize(const CompositionSeries& x) {
    const Composition c = center(x);
    std::vector<Composition> rows;
    rows.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        rows.push_back(perturb(x[i], c, /*inverse=*/true));
    }
    return CompositionSeries(std::move(rows), x.labels(), x.names());
}

CompositionSeries decentralize(const CompositionSeries& x, const Composition& c) {
    if (x.size() > 0 && x.parts() != c.size()) {
        throw DimensionMismatch("decentralize: center has wrong part count");
    }
    std::vector<Composition> rows;
    rows.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) rows.push_back(perturb(x[i], c));
    return CompositionSeries(std::move(rows), x.labels(), x.names());
}

}  // namespace cogrey
