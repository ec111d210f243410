#include "vlab/tables.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "vlab/criteria.hpp"
#include "vlab/ree_hoover.hpp"
#include "vlab/trees.hpp"

namespace vlab {

namespace {

constexpr int kTableNMax = 10;

const char* criterion_label(int id) {
    switch (id) {
        case 1: return "Cr1";
        case 2: return "Cr2";
        case 3: return "Cr3";
        case 4: return "Cr'1";
        case 5: return "Cr'2";
        case 6: return "Cr'3";
    }
    throw RangeError("table id outside 1..6");
}

std::map<std::pair<int, bool>, TreeCriteria> g_tree_cache;
std::mutex g_tree_mutex;

std::map<int, Int> g_rh_cache;
std::mutex g_rh_mutex;

Int rh_live_count(int n) {
    std::lock_guard<std::mutex> lock(g_rh_mutex);
    auto it = g_rh_cache.find(n);
    if (it == g_rh_cache.end())
        it = g_rh_cache.emplace(n, Int(enumerate_rh_diagrams(n).size())).first;
    return it->second;
}

} // namespace

const TreeCriteria& tree_criteria(int n, bool a_subset) {
    std::lock_guard<std::mutex> lock(g_tree_mutex);
    auto key = std::make_pair(n, a_subset);
    auto it = g_tree_cache.find(key);
    if (it == g_tree_cache.end()) {
        BaseLinearCombination L = to_linear_combination(
            tree_sum(n, a_subset ? TreeSubset::ASubset : TreeSubset::Full, improper_space()));
        TreeCriteria c{cr1(L), cr2(L), cr3(L)};
        it = g_tree_cache.emplace(key, std::move(c)).first;
    }
    return it->second;
}

std::optional<Int> frame_sum_reference(int criterion, int n) {
    // published values; dashes elsewhere
    static const std::map<int, std::map<int, long long>> values = {
        {1, {{2, 1}, {3, 1}, {4, 5}, {5, 57}}},
        {2, {{2, 1}, {3, 3}, {4, 26}}},
        {3, {{2, 0}, {3, 1}, {4, 11}}},
    };
    auto row = values.find(criterion);
    if (row == values.end()) throw RangeError("frame_sum_reference: criterion outside 1..3");
    auto cell = row->second.find(n);
    if (cell == row->second.end()) return std::nullopt;
    return Int(cell->second);
}

Int rh_criterion_value(int criterion, int n, bool& reference) {
    if (criterion != 1 && criterion != 2)
        throw DomainError("diagram combinations live on a box; only Cr1 and Cr2 apply");
    Int count;
    if (n <= 7) {
        count = rh_live_count(n);
        reference = false;
    } else {
        count = rh_reference_count(n);
        reference = true;
    }
    if (criterion == 1) return count;
    return count * pair_count(n);
}

Table make_table(int id, int n_max) {
    if (id < 1 || id > 6) throw RangeError("table id outside 1..6");
    if (n_max < 2 || n_max > kTableNMax) throw RangeError("table n_max outside 2..10");

    const int base = (id - 1) % 3 + 1; // underlying criterion
    const bool primed = id > 3;
    const std::string crit = criterion_label(id);

    Table t;
    t.id = id;
    t.title = "Table " + std::to_string(id) + " of complexity by the criterion " + crit;
    for (int n = 2; n <= n_max; ++n) t.columns.push_back(n);

    auto tree_row = [&](bool a_subset) {
        TableRow row;
        row.label = crit + "(L_TR(n" + (a_subset ? ".0" : "") + "))";
        Int running = 0;
        for (int n = 2; n <= n_max; ++n) {
            const TreeCriteria& c = tree_criteria(n, a_subset);
            const Int& v = base == 1 ? c.cr1 : base == 2 ? c.cr2 : c.cr3;
            running += v;
            row.cells.push_back(TableCell{primed ? running : v, false});
        }
        return row;
    };
    t.rows.push_back(tree_row(false));
    t.rows.push_back(tree_row(true));

    {
        TableRow row;
        row.label = crit + "(L_F(n))";
        for (int n = 2; n <= n_max; ++n) {
            auto v = frame_sum_reference(base, n);
            row.cells.push_back(TableCell{v, v.has_value()});
        }
        t.rows.push_back(row);
    }

    if (base != 3) {
        TableRow row;
        row.label = crit + "(L_RH(n))";
        for (int n = 2; n <= n_max; ++n) {
            bool ref = false;
            Int v = rh_criterion_value(base, n, ref);
            row.cells.push_back(TableCell{std::move(v), ref});
        }
        t.rows.push_back(row);
    }

    t.note = "Cells marked * carry published reference values; the rest are computed. "
             "L_RH rows count nonisomorphic diagrams while L_TR rows count "
             "maximal-isomorphism tree classes.";
    return t;
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string render_csv(const Table& t) {
    std::ostringstream os;
    os << "table,row,n,value,source\r\n";
    for (const TableRow& row : t.rows) {
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            const TableCell& cell = row.cells[i];
            os << t.id << ',' << csv_quote(row.label) << ',' << t.columns[i] << ',';
            if (cell.value) os << cell.value->str();
            os << ',' << (cell.value ? (cell.reference ? "reference" : "computed") : "absent")
               << "\r\n";
        }
    }
    return os.str();
}

std::string render_markdown(const Table& t) {
    std::ostringstream os;
    os << "### " << t.title << "\n\n";
    os << "| n |";
    for (int n : t.columns) os << ' ' << n << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << "---|";
    os << '\n';
    for (const TableRow& row : t.rows) {
        os << "| " << row.label << " |";
        for (const TableCell& cell : row.cells) {
            os << ' ';
            if (cell.value)
                os << cell.value->str() << (cell.reference ? "*" : "");
            else
                os << '-';
            os << " |";
        }
        os << '\n';
    }
    os << '\n' << t.note << '\n';
    return os.str();
}

nlohmann::ordered_json table_to_json(const Table& t) {
    nlohmann::ordered_json j;
    j["table"] = t.id;
    j["title"] = t.title;
    j["columns"] = t.columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const TableRow& row : t.rows) {
        nlohmann::ordered_json r;
        r["label"] = row.label;
        r["cells"] = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            nlohmann::ordered_json c;
            c["n"] = t.columns[i];
            if (row.cells[i].value) {
                c["value"] = to_ll(*row.cells[i].value);
                c["source"] = row.cells[i].reference ? "reference" : "computed";
            } else {
                c["value"] = nullptr;
                c["source"] = "absent";
            }
            r["cells"].push_back(std::move(c));
        }
        j["rows"].push_back(std::move(r));
    }
    j["note"] = t.note;
    return j;
}

} // namespace vlab
