#include "cogrey/accumulation.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "cogrey/errors.hpp"

namespace cogrey {

namespace {

constexpr double kDiagonalFloor = 1e-6;

std::size_t packed_size(std::size_t n) { return n * (n + 1) / 2; }

std::size_t packed_index(std::size_t i, std::size_t j) { return i * (i + 1) / 2 + j; }

std::vector<std::vector<double>> row_logs(const CompositionSeries& x) {
    std::vector<std::vector<double>> logs(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        logs[i].resize(x.parts());
        for (std::size_t j = 0; j < x.parts(); ++j) logs[i][j] = std::log(x[i][j]);
    }
    return logs;
}

}  // namespace

AccumulationMatrix::AccumulationMatrix(std::size_t n, std::vector<double> packed)
    : n_(n), entries_(std::move(packed)) {
    if (entries_.size() != packed_size(n_)) {
        throw LengthMismatch("accumulation matrix of size " + std::to_string(n_) +
                             " needs " + std::to_string(packed_size(n_)) +
                             " entries, got " + std::to_string(entries_.size()));
    }
}

double AccumulationMatrix::at(std::size_t i, std::size_t j) const {
    if (j > i) return 0.0;
    return entries_[packed_index(i, j)];
}

AccumulationMatrix standard_ago(std::size_t n) {
    return AccumulationMatrix(n, std::vector<double>(packed_size(n), 1.0));
}

CompositionSeries accumulate(const AccumulationMatrix& b, const CompositionSeries& x) {
    if (b.size() != x.size()) {
        throw DimensionMismatch("accumulate: matrix size " + std::to_string(b.size()) +
                                " vs series length " + std::to_string(x.size()));
    }
    const std::size_t d = x.parts();
    const auto logs = row_logs(x);
    std::vector<Composition> rows;
    rows.reserve(x.size());
    std::vector<double> acc(d);
    for (std::size_t k = 0; k < x.size(); ++k) {
        std::fill(acc.begin(), acc.end(), 0.0);
        for (std::size_t j = 0; j <= k; ++j) {
            const double w = b.at(k, j);
            for (std::size_t p = 0; p < d; ++p) acc[p] += w * logs[j][p];
        }
        rows.push_back(composition_from_log(acc));
    }
    return CompositionSeries(std::move(rows), x.labels(), x.names());
}

CompositionSeries deaccumulate(const AccumulationMatrix& b, const CompositionSeries& y) {
    if (b.size() != y.size()) {
        throw DimensionMismatch("deaccumulate: matrix size " + std::to_string(b.size()) +
                                " vs series length " + std::to_string(y.size()));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (std::abs(b.at(i, i)) < kDiagonalFloor) {
            throw SingularMatrix("diagonal entry " + std::to_string(i + 1) +
                                 " below invertibility floor");
        }
    }
    const std::size_t d = y.parts();
    // Forward substitution on centered logs; each solved row is re-centered
    // so the running combination never drifts off the clr plane.
    std::vector<std::vector<double>> solved(y.size());
    std::vector<Composition> rows;
    rows.reserve(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) {
        std::vector<double> acc = y[k].clr();
        for (std::size_t j = 0; j < k; ++j) {
            const double w = b.at(k, j);
            for (std::size_t p = 0; p < d; ++p) acc[p] -= w * solved[j][p];
        }
        double mean = 0.0;
        for (double v : acc) mean += v;
        mean /= static_cast<double>(d);
        for (double& v : acc) v = (v - mean) / b.at(k, k);
        solved[k] = acc;
        rows.push_back(composition_from_log(acc));
    }
    return CompositionSeries(std::move(rows), y.labels(), y.names());
}

AccumulationMatrix extend_for_forecast(const AccumulationMatrix& b, std::size_t h,
                                       ExtendMode mode) {
    const std::size_t n = b.size();
    const std::size_t m = n + h;
    std::vector<double> packed(packed_size(m), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) packed[packed_index(i, j)] = b.at(i, j);
    }
    for (std::size_t i = n; i < m; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double w = 1.0;
            if (mode == ExtendMode::replicate_last && n > 0 && j < n) {
                w = b.at(n - 1, j);
            }
            packed[packed_index(i, j)] = w;
        }
    }
    return AccumulationMatrix(m, std::move(packed));
}

std::vector<double> encode(const AccumulationMatrix& b) { return b.packed(); }

AccumulationMatrix decode(const std::vector<double>& packed, std::size_t n) {
    return AccumulationMatrix(n, packed);
}

std::string to_json_string(const AccumulationMatrix& b) {
    nlohmann::ordered_json j;
    j["n"] = b.size();
    j["entries"] = b.packed();
    return j.dump(2);
}

AccumulationMatrix matrix_from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        return AccumulationMatrix(j.at("n").get<std::size_t>(),
                                  j.at("entries").get<std::vector<double>>());
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("bad accumulation matrix JSON: ") + e.what());
    }
}

std::string to_heatmap_csv(const AccumulationMatrix& b) {
    std::ostringstream out;
    out << "row";
    for (std::size_t j = 0; j < b.size(); ++j) out << ",c" << (j + 1);
    out << "\n";
    for (std::size_t i = 0; i < b.size(); ++i) {
        out << "r" << (i + 1);
        for (std::size_t j = 0; j < b.size(); ++j) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.12g", b.at(i, j));
            out << ',' << buf;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace cogrey
