#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "vlab/exact.hpp"

namespace vlab {

// One table cell: empty (printed as a dash), or a value that is either
// freshly computed or carried from the reference-constants store.
struct TableCell {
    std::optional<Int> value;
    bool reference = false;
};

struct TableRow {
    std::string label;
    std::vector<TableCell> cells;
};

struct Table {
    int id = 0;
    std::string title;
    std::vector<int> columns;
    std::vector<TableRow> rows;
    std::string note;
};

// The six complexity tables; id in 1..6, 2 <= n_max <= 10.
Table make_table(int id, int n_max = 10);

std::string render_csv(const Table& t);
std::string render_markdown(const Table& t);
nlohmann::ordered_json table_to_json(const Table& t);

// Frame-sum criterion values carried as reference constants
// (Cr1 at n=2..5, Cr2 and Cr3 at n=2..4); nullopt where unpublished.
std::optional<Int> frame_sum_reference(int criterion, int n);

// Criterion value of the complete diagram combination of order n;
// enumerated live for n <= 7, assembled from the reference count above.
// Sets `reference` accordingly. criterion must be 1 or 2.
Int rh_criterion_value(int criterion, int n, bool& reference);

// Criterion values of the two tree-sum families, cached per order.
struct TreeCriteria {
    Int cr1, cr2, cr3;
};
const TreeCriteria& tree_criteria(int n, bool a_subset);

} // namespace vlab
