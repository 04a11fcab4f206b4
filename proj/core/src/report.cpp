#include "hopfd2/report.hpp"

#include <sstream>

namespace hopfd2 {

bool Report::pass() const {
    for (auto& i : items)
        if (!i.pass) return false;
    return true;
}

const CheckItem* Report::find(const std::string& name) const {
    for (auto& i : items)
        if (i.name == name) return &i;
    return nullptr;
}

void Report::append(const Report& r, const std::string& prefix) {
    for (auto i : r.items) {
        i.name = prefix + i.name;
        items.push_back(std::move(i));
    }
}

std::string Report::summary() const {
    std::ostringstream os;
    for (auto& i : items) {
        os << (i.pass ? "PASS " : "FAIL ") << i.name;
        if (!i.pass && i.residual_rank) os << " (residual rank " << i.residual_rank << ")";
        if (!i.detail.empty()) os << " : " << i.detail;
        os << "\n";
    }
    return os.str();
}

CheckItem residual_item(const std::string& name, const std::string& anchor, const Matrix& residual) {
    CheckItem c;
    c.name = name;
    c.anchor = anchor;
    c.pass = residual.is_zero();
    c.residual_rank = c.pass ? 0 : rank(residual);
    return c;
}

CheckItem bool_item(const std::string& name, const std::string& anchor, bool ok, std::string detail) {
    CheckItem c;
    c.name = name;
    c.anchor = anchor;
    c.pass = ok;
    c.detail = std::move(detail);
    return c;
}

void Residuals::add(const Matrix& lhs, const Matrix& rhs) {
    Matrix d = lhs - rhs;
    for (auto& c : d.columns()) add(c);
}

CheckItem Residuals::item(const std::string& name, const std::string& anchor) const {
    CheckItem c;
    c.name = name;
    c.anchor = anchor;
    c.pass = zero();
    if (!c.pass) {
        c.residual_rank = rank(matrix());
        c.detail = std::to_string(cols_.size()) + " nonzero residual vectors";
    }
    return c;
}

}  // namespace hopfd2
