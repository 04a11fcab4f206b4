#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "hopfd2/linalg.hpp"

namespace hopfd2 {

/// One verified identity. anchor names the statement being checked.
struct CheckItem {
    std::string name;
    std::string anchor;
    bool pass = true;
    int residual_rank = 0;
    std::string detail;
    double seconds = 0;
};

struct Report {
    std::string title;
    std::vector<CheckItem> items;
    double seconds = 0;

    bool pass() const;
    const CheckItem* find(const std::string& name) const;
    void add(CheckItem item) { items.push_back(std::move(item)); }
    /// Append the items of r, prefixing their names.
    void append(const Report& r, const std::string& prefix = "");
    std::string summary() const;
};

/// pass iff the residual is the zero map.
CheckItem residual_item(const std::string& name, const std::string& anchor, const Matrix& residual);
CheckItem bool_item(const std::string& name, const std::string& anchor, bool ok, std::string detail = {});

/// Collects residual vectors for one identity checked on many inputs.
class Residuals {
public:
    explicit Residuals(int dim) : dim_(dim) {}
    void add(const SVec& v) {
        if (!v.empty()) cols_.push_back(v);
    }
    void add(const SVec& lhs, const SVec& rhs) { add(sv::sub(lhs, rhs)); }
    void add(const Matrix& lhs, const Matrix& rhs);
    bool zero() const { return cols_.empty(); }
    Matrix matrix() const { return Matrix::from_columns(dim_, cols_); }
    CheckItem item(const std::string& name, const std::string& anchor) const;

private:
    int dim_;
    std::vector<SVec> cols_;
};

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

}  // namespace hopfd2
