#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "pallino/grid.hpp"

namespace pallino {

/// `count` balls of `color`, inserted left to right.
struct Run {
    int count = 1;
    Color color = Color::yellow;

    bool operator==(const Run&) const = default;
};

/// One card line. Label A is the bottom row of the mosaic, B sits above it.
struct CardRow {
    char label = 'A';
    std::vector<Run> runs;

    int width() const {
        int sum = 0;
        for (const Run& r : runs) sum += r.count;
        return sum;
    }

    bool operator==(const CardRow&) const = default;
};

/// A coding card: rows stored bottom-up, labels consecutive from 'A'.
struct CodingCard {
    int columns = 12;
    std::vector<CardRow> rows;

    bool operator==(const CodingCard&) const = default;
};

namespace detail {

inline std::vector<Run> parse_runs(const std::string& rest, int line_no) {
    std::vector<Run> runs;
    std::istringstream tokens(rest);
    std::string token;
    while (tokens >> token) {
        if (token.size() < 2)
            fail(errc::bad_run_syntax,
                 "line " + std::to_string(line_no) + ": run '" + token + "' is not <count><color>");
        const std::string digits = token.substr(0, token.size() - 1);
        if (digits.size() > 6 ||
            !std::all_of(digits.begin(), digits.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            fail(errc::bad_run_syntax,
                 "line " + std::to_string(line_no) + ": run '" + token + "' has a bad count");
        const int count = std::stoi(digits);
        if (count < 1)
            fail(errc::non_positive_count,
                 "line " + std::to_string(line_no) + ": run '" + token + "' has count 0");
        runs.push_back(Run{count, color_from_code(token.back())});
    }
    if (runs.empty())
        fail(errc::bad_run_syntax, "line " + std::to_string(line_no) + ": row has no runs");
    return runs;
}

}  // namespace detail

/// Text form, one row per line: `<LABEL>: <count><color> ...`, e.g.
/// `A: 3R 4B 5Y`. Lines may come in any order; an optional `COLS <n>` header
/// overrides the default 12 columns. Blank lines are ignored.
inline CodingCard card_parse(const std::string& text) {
    CodingCard card;
    std::map<char, CardRow> by_label;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        if (line.rfind("COLS", 0) == 0) {
            std::istringstream header(line);
            std::string keyword, extra;
            int n = 0;
            header >> keyword >> n;
            if (header.fail() || keyword != "COLS" || n < 1 || (header >> extra))
                fail(errc::bad_run_syntax,
                     "line " + std::to_string(line_no) + ": bad COLS header '" + line + "'");
            card.columns = n;
            continue;
        }

        if (line.size() < 2 || line[0] < 'A' || line[0] > 'Z' || line[1] != ':')
            fail(errc::bad_run_syntax,
                 "line " + std::to_string(line_no) + ": expected '<LABEL>: <runs>' in '" + line + "'");
        const char label = line[0];
        if (by_label.count(label))
            fail(errc::duplicate_label, std::string("row ") + label + " appears twice");
        by_label[label] = CardRow{label, detail::parse_runs(line.substr(2), line_no)};
    }

    char expected = 'A';
    for (auto& [label, row] : by_label) {
        if (label != expected)
            fail(errc::gap_in_labels, std::string("row ") + expected + " is missing");
        card.rows.push_back(std::move(row));
        ++expected;
    }
    return card;
}

/// Inverse of card_parse on canonical text: bottom row first, `COLS <n>`
/// header only when the card is not 12 columns wide.
inline std::string card_print(const CodingCard& card) {
    std::string out;
    if (card.columns != 12) out += "COLS " + std::to_string(card.columns);
    for (const CardRow& row : card.rows) {
        if (!out.empty()) out += '\n';
        out += row.label;
        out += ':';
        for (const Run& run : row.runs) {
            out += ' ';
            out += std::to_string(run.count);
            out += color_code(run.color);
        }
    }
    return out;
}

struct RowSumViolation {
    char label = 'A';
    int sum = 0;
    int expected = 12;

    bool operator==(const RowSumViolation&) const = default;
};

struct CardReport {
    std::vector<RowSumViolation> row_sums;

    bool ok() const { return row_sums.empty(); }
};

/// The classroom check: on a 12-column card every row's counts must total
/// exactly 12. A wrong sum proves a mistake; a right sum proves nothing.
inline CardReport validate(const CodingCard& card) {
    CardReport report;
    for (const CardRow& row : card.rows) {
        const int sum = row.width();
        if (sum != card.columns) report.row_sums.push_back({row.label, sum, card.columns});
    }
    return report;
}

/// Expand the card into the mosaic it describes. Row A fills mosaic row 0.
inline Mosaic execute(const CodingCard& card) {
    const CardReport report = validate(card);
    if (!report.ok()) {
        const RowSumViolation& v = report.row_sums.front();
        fail(errc::invalid_card, std::string("row ") + v.label + " sums to " +
                                     std::to_string(v.sum) + ", expected " +
                                     std::to_string(v.expected));
    }
    Mosaic m(static_cast<int>(card.rows.size()), card.columns);
    for (std::size_t r = 0; r < card.rows.size(); ++r) {
        int col = 0;
        for (const Run& run : card.rows[r].runs)
            for (int i = 0; i < run.count; ++i) m.at(static_cast<int>(r), col++) = run.color;
    }
    return m;
}

/// Write the canonical card for a mosaic: maximal runs, one row per filled
/// mosaic row. Filled rows must be complete and contiguous from the bottom —
/// the card vocabulary has no empty ball.
inline CodingCard encode(const Mosaic& m) {
    int filled_rows = 0;
    bool seen_empty_row = false;
    for (int row = 0; row < m.rows(); ++row) {
        int filled = 0;
        for (int col = 0; col < m.columns(); ++col)
            if (m.at(row, col)) ++filled;
        if (filled == 0) {
            seen_empty_row = true;
        } else if (filled < m.columns()) {
            fail(errc::partial_row, "row " + std::to_string(row + 1) +
                                        " from the bottom has " + std::to_string(filled) + " of " +
                                        std::to_string(m.columns()) + " cells filled");
        } else if (seen_empty_row) {
            fail(errc::floating_row,
                 "row " + std::to_string(row + 1) + " from the bottom sits above an empty row");
        } else {
            ++filled_rows;
        }
    }
    if (filled_rows > 26) fail(errc::too_many_rows, "cards label rows A-Z only");

    CodingCard card;
    card.columns = m.columns();
    for (int row = 0; row < filled_rows; ++row) {
        CardRow card_row{static_cast<char>('A' + row), {}};
        for (int col = 0; col < m.columns(); ++col) {
            const Color c = *m.at(row, col);
            if (!card_row.runs.empty() && card_row.runs.back().color == c)
                card_row.runs.back().count++;
            else
                card_row.runs.push_back(Run{1, c});
        }
        card.rows.push_back(std::move(card_row));
    }
    return card;
}

/// Merge adjacent same-color runs. Children legally write `2R 1R`; the
/// machine cannot tell it from `3R`.
inline CodingCard normalize(const CodingCard& card) {
    CodingCard out;
    out.columns = card.columns;
    for (const CardRow& row : card.rows) {
        CardRow merged{row.label, {}};
        for (const Run& run : row.runs) {
            if (!merged.runs.empty() && merged.runs.back().color == run.color)
                merged.runs.back().count += run.count;
            else
                merged.runs.push_back(run);
        }
        out.rows.push_back(std::move(merged));
    }
    return out;
}

/// One wrong cell, in card coordinates (row letter, 1-based column) because
/// the audience is the debugging lesson.
struct CellDiff {
    char row_label = 'A';
    int column = 1;
    Cell expected;
    Cell actual;

    bool operator==(const CellDiff&) const = default;
};

/// Mismatches bottom row first, left to right. Empty iff the mosaics match.
inline std::vector<CellDiff> diff(const Mosaic& target, const Mosaic& actual) {
    if (target.rows() != actual.rows() || target.columns() != actual.columns())
        fail(errc::dimension_mismatch,
             std::to_string(target.rows()) + "x" + std::to_string(target.columns()) + " vs " +
                 std::to_string(actual.rows()) + "x" + std::to_string(actual.columns()));
    std::vector<CellDiff> out;
    for (int row = 0; row < target.rows(); ++row)
        for (int col = 0; col < target.columns(); ++col)
            if (target.at(row, col) != actual.at(row, col))
                out.push_back(CellDiff{static_cast<char>('A' + row), col + 1, target.at(row, col),
                                       actual.at(row, col)});
    return out;
}

}  // namespace pallino
