#include "gia/render.hpp"

#include <algorithm>
#include <sstream>

namespace gia {

namespace {

std::size_t column_width(const std::string& sym, const std::vector<std::string>& labels) {
    std::size_t w = sym.size();
    for (const auto& l : labels) w = std::max(w, l.size());
    return w;
}

std::string pad(const std::string& s, std::size_t w) {
    std::string out = s;
    out.resize(std::max(w, s.size()), ' ');
    return out;
}

} // namespace

std::string render_binary_table(const std::string& sym, const std::vector<std::string>& labels,
                                const std::vector<int>& cells) {
    const int n = static_cast<int>(labels.size());
    std::size_t w = column_width(sym, labels);
    std::ostringstream os;
    os << pad(sym, w) << " |";
    for (const auto& l : labels) os << " " << pad(l, w);
    os << "\n";
    for (int i = 0; i < n; ++i) {
        os << pad(labels[static_cast<std::size_t>(i)], w) << " |";
        for (int j = 0; j < n; ++j)
            os << " " << pad(labels[static_cast<std::size_t>(cells[static_cast<std::size_t>(i) * n + j])], w);
        os << "\n";
    }
    return os.str();
}

std::string render_unary_table(const std::string& sym, const std::vector<std::string>& labels,
                               const std::vector<int>& cells) {
    std::size_t w = column_width("x", labels);
    std::ostringstream os;
    os << pad("x", w) << " | " << sym << "(x)\n";
    for (std::size_t i = 0; i < labels.size(); ++i)
        os << pad(labels[i], w) << " | " << labels[static_cast<std::size_t>(cells[i])] << "\n";
    return os.str();
}

std::string render_order(const DerivedOrder& order, const std::vector<std::string>& labels) {
    std::ostringstream os;
    if (!order.poset) os << "not a partial order: " << order.violation << "\n";
    // covering relation: i < j with nothing strictly between
    bool any = false;
    for (int i = 0; i < order.n; ++i)
        for (int j = 0; j < order.n; ++j) {
            if (i == j || !order.le(i, j)) continue;
            if (order.le(j, i)) continue;
            bool covered = true;
            for (int k = 0; k < order.n && covered; ++k)
                if (k != i && k != j && order.le(i, k) && order.le(k, j) && !order.le(k, i) &&
                    !order.le(j, k))
                    covered = false;
            if (covered) {
                os << labels[static_cast<std::size_t>(i)] << " < " << labels[static_cast<std::size_t>(j)]
                   << "\n";
                any = true;
            }
        }
    if (!any) os << "(no comparable pairs)\n";
    Bounds b = derive_bounds(order);
    os << "least: " << (b.least ? labels[static_cast<std::size_t>(*b.least)] : std::string("none"))
       << "  greatest: "
       << (b.greatest ? labels[static_cast<std::size_t>(*b.greatest)] : std::string("none")) << "\n";
    return os.str();
}

} // namespace gia
