#pragma once

// Tabular sweep output: CSV with one `# params:` echo line and one
// `#`-prefixed column header, or the JSON mirror.  Rows are evaluated in
// parallel but always emitted in index order, so output bytes do not depend
// on the thread count.

#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ptcav/states.hpp"  // format_g17

namespace ptcav {

struct Table {
    std::vector<std::pair<std::string, std::string>> params;  // echoed in order
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

inline void write_csv(const Table& table, std::ostream& os) {
    os << "# params:";
    for (const auto& [k, v] : table.params) os << ' ' << k << '=' << v;
    os << '\n';
    os << "# ";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ',';
        os << table.columns[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << format_g17(row[i]);
        }
        os << '\n';
    }
}

inline void write_json(const Table& table, std::ostream& os) {
    // NaN has no JSON literal; mirror it as null.
    os << "{\"params\":{";
    for (std::size_t i = 0; i < table.params.size(); ++i) {
        if (i) os << ',';
        os << '"' << table.params[i].first << "\":\"" << table.params[i].second << '"';
    }
    os << "},\"columns\":[";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ',';
        os << '"' << table.columns[i] << '"';
    }
    os << "],\"rows\":[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (r) os << ',';
        os << '[';
        for (std::size_t i = 0; i < table.rows[r].size(); ++i) {
            if (i) os << ',';
            const double v = table.rows[r][i];
            if (std::isnan(v))
                os << "null";
            else
                os << format_g17(v);
        }
        os << ']';
    }
    os << "]}\n";
}

// Evaluate fn(0..count-1) across `threads` workers; the result vector is
// indexed by row, independent of scheduling.
inline std::vector<std::vector<double>> parallel_rows(
    std::size_t count, int threads, const std::function<std::vector<double>(std::size_t)>& fn) {
    std::vector<std::vector<double>> rows(count);
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) rows[i] = fn(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                rows[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::jthread> pool;
    const std::size_t n = std::min(static_cast<std::size_t>(threads), count);
    pool.reserve(n);
    for (std::size_t k = 0; k < n; ++k) pool.emplace_back(worker);
    pool.clear();  // join
    if (error) std::rethrow_exception(error);
    return rows;
}

}  // namespace ptcav
