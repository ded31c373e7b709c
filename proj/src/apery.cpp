#include "tcone/apery.hpp"

#include <algorithm>
#include <sstream>

#include "tcone/ideals.hpp"

namespace tcone {

std::vector<Value> AperyTable::column(std::size_t i) const
{
    std::vector<Value> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row[i]);
    return out;
}

AperyTable build_apery_table(const NumericalSemigroup& s)
{
    AperyTable table;
    table.e = s.multiplicity();

    SemigroupIdeal ideal = SemigroupIdeal::whole(s);
    std::vector<Value> current = ideal.apery_set();
    for (Value n = 0;; ++n) {
        if (n > table.e - 1)
            throw Error(ErrorKind::ReductionBoundExceeded,
                        "Apery rows of " + format_generators(s.minimal_generators()) +
                            " did not stabilize by n = e - 1");
        table.rows.push_back(current);
        ideal = ideal.add_maximal();
        std::vector<Value> next = ideal.apery_set();
        bool stable = true;
        for (std::size_t i = 0; i < current.size(); ++i)
            stable = stable && next[i] == current[i] + table.e;
        if (stable) {
            table.r = static_cast<int>(n);
            break;
        }
        current = std::move(next);
    }
    return table;
}

const char* to_string(TableViolation::Rule rule)
{
    using Rule = TableViolation::Rule;
    switch (rule) {
    case Rule::Shape: return "shape";
    case Rule::Residue: return "residue";
    case Rule::ColumnZero: return "column-zero";
    case Rule::Step: return "step";
    case Rule::MaximalIdeal: return "maximal-ideal";
    case Rule::ReductionBound: return "reduction-bound";
    case Rule::NotMinimal: return "not-minimal";
    }
    return "unknown";
}

std::string describe(const TableViolation& v)
{
    std::ostringstream out;
    out << to_string(v.rule) << " rule violated at (n=" << v.n << ", i=" << v.i << ")";
    return out.str();
}

std::vector<TableViolation> validate_table(const AperyTable& table)
{
    using Rule = TableViolation::Rule;
    std::vector<TableViolation> out;
    const Value e = table.e;
    const auto width = static_cast<std::size_t>(e);

    if (e < 1 || table.r < 0 || table.rows.size() != static_cast<std::size_t>(table.r) + 1) {
        out.push_back({table.r, 0, Rule::Shape});
        return out;
    }
    for (std::size_t n = 0; n < table.rows.size(); ++n)
        if (table.rows[n].size() != width) {
            out.push_back({static_cast<int>(n), 0, Rule::Shape});
            return out;
        }

    if (table.r > e - 1) out.push_back({table.r, 0, Rule::ReductionBound});

    for (int n = 0; n <= table.r; ++n) {
        for (std::size_t i = 0; i < width; ++i) {
            const Value w = table.at(n, i);
            if (w < 0 || w % e != static_cast<Value>(i)) out.push_back({n, i, Rule::Residue});
            if (i == 0 && w != n * e) out.push_back({n, i, Rule::ColumnZero});
            if (n > 0) {
                const Value step = w - table.at(n - 1, i);
                if (step != 0 && step != e) out.push_back({n, i, Rule::Step});
                if (n == 1 && i > 0 && step != 0) out.push_back({n, i, Rule::MaximalIdeal});
            }
        }
    }

    if (table.r >= 1) {
        bool shifted = true;
        for (std::size_t i = 0; i < width; ++i)
            shifted = shifted && table.at(table.r, i) == table.at(table.r - 1, i) + e;
        if (shifted) out.push_back({table.r, 0, Rule::NotMinimal});
    }
    return out;
}

std::string format_table(const AperyTable& table)
{
    std::vector<std::string> labels;
    for (int n = 0; n <= table.r; ++n) {
        if (n == 0) labels.push_back("Ap(S)");
        else if (n == 1) labels.push_back("Ap(M)");
        else labels.push_back("Ap(" + std::to_string(n) + "M)");
    }
    std::size_t label_width = 0;
    for (const auto& l : labels) label_width = std::max(label_width, l.size());
    std::size_t cell = 1;
    for (const auto& row : table.rows)
        for (Value w : row) cell = std::max(cell, std::to_string(w).size());

    std::ostringstream out;
    for (std::size_t n = 0; n < table.rows.size(); ++n) {
        out << labels[n] << std::string(label_width - labels[n].size(), ' ') << " |";
        for (Value w : table.rows[n]) {
            const std::string text = std::to_string(w);
            out << ' ' << std::string(cell - text.size(), ' ') << text;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace tcone
