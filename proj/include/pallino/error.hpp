#pragma once

#include <stdexcept>
#include <string>

namespace pallino {

/// Every failure the library reports deliberately, one enumerator per kind.
/// Violation reports (row sums, inventory overruns, mosaic diffs) are data,
/// not errors, and never surface here.
enum class errc {
    // grid
    unknown_color,
    ragged_lines,
    empty_mosaic,
    // coding cards
    duplicate_label,
    gap_in_labels,
    bad_run_syntax,
    non_positive_count,
    invalid_card,
    partial_row,
    floating_row,
    dimension_mismatch,
    too_many_rows,
    // turtle programs
    bad_token,
    bad_count,
    dangling_paren,
    off_grid,
    // ciphers
    no_letters,
    unmappable_character,
    unknown_symbol,
    bad_key_format,
    non_bijective_layout,
    bad_color_permutation,
    bad_pair,
    // machine simulator
    inventory_exceeded,
    empty_feed,
    column_full,
    bad_script_syntax,
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::unknown_color: return "UnknownColor";
        case errc::ragged_lines: return "RaggedLines";
        case errc::empty_mosaic: return "Empty";
        case errc::duplicate_label: return "DuplicateLabel";
        case errc::gap_in_labels: return "GapInLabels";
        case errc::bad_run_syntax: return "BadRunSyntax";
        case errc::non_positive_count: return "NonPositiveCount";
        case errc::invalid_card: return "InvalidCard";
        case errc::partial_row: return "PartialRow";
        case errc::floating_row: return "FloatingRow";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::too_many_rows: return "TooManyRows";
        case errc::bad_token: return "BadToken";
        case errc::bad_count: return "BadCount";
        case errc::dangling_paren: return "DanglingParen";
        case errc::off_grid: return "OffGrid";
        case errc::no_letters: return "NoLetters";
        case errc::unmappable_character: return "UnmappableCharacter";
        case errc::unknown_symbol: return "UnknownSymbol";
        case errc::bad_key_format: return "BadKeyFormat";
        case errc::non_bijective_layout: return "NonBijectiveLayout";
        case errc::bad_color_permutation: return "BadColorPermutation";
        case errc::bad_pair: return "BadPair";
        case errc::inventory_exceeded: return "InventoryExceeded";
        case errc::empty_feed: return "EmptyFeed";
        case errc::column_full: return "ColumnFull";
        case errc::bad_script_syntax: return "BadScriptSyntax";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& detail) {
    throw Error(code, detail);
}

/// Raised when a cursor move leaves the grid. Indices are 1-based: the first
/// body instruction is 1, the first step inside a repeat is 1.
class OffGridError : public Error {
public:
    OffGridError(int instruction, int step, int row, int col)
        : Error(errc::off_grid,
                "instruction " + std::to_string(instruction) + " step " + std::to_string(step) +
                    " attempts (" + std::to_string(row) + "," + std::to_string(col) + ")"),
          instruction_(instruction), step_(step), row_(row), col_(col) {}

    int instruction() const noexcept { return instruction_; }
    int step() const noexcept { return step_; }
    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

private:
    int instruction_;
    int step_;
    int row_;
    int col_;
};

class ColumnFullError : public Error {
public:
    explicit ColumnFullError(int column)
        : Error(errc::column_full, "column " + std::to_string(column)), column_(column) {}

    int column() const noexcept { return column_; }

private:
    int column_;
};

}  // namespace pallino
