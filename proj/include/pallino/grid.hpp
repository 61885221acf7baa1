#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pallino/error.hpp"
#include "pallino/rng.hpp"

namespace pallino {

/// The five ball colors of the machine. One-letter text codes: Y R B W K.
enum class Color : std::uint8_t { yellow, red, blue, white, black };

inline constexpr std::array<Color, 5> kAllColors{Color::yellow, Color::red, Color::blue,
                                                 Color::white, Color::black};

inline constexpr char color_code(Color c) {
    constexpr char codes[] = {'Y', 'R', 'B', 'W', 'K'};
    return codes[static_cast<std::size_t>(c)];
}

inline constexpr const char* color_name(Color c) {
    constexpr const char* names[] = {"yellow", "red", "blue", "white", "black"};
    return names[static_cast<std::size_t>(c)];
}

inline Color color_from_code(char code) {
    switch (std::toupper(static_cast<unsigned char>(code))) {
        case 'Y': return Color::yellow;
        case 'R': return Color::red;
        case 'B': return Color::blue;
        case 'W': return Color::white;
        case 'K': return Color::black;
    }
    fail(errc::unknown_color, std::string("'") + code + "' is not one of Y R B W K");
}

inline std::optional<Color> color_from_name(const std::string& name) {
    for (Color c : kAllColors) {
        if (name == color_name(c)) return c;
    }
    return std::nullopt;
}

using Cell = std::optional<Color>;

inline char cell_code(const Cell& cell) { return cell ? color_code(*cell) : '.'; }

/// Rectangular grid of optional colors. Row 0 is the BOTTOM row, column 0 the
/// leftmost, matching the coding-card convention ("lettered from the bottom
/// left"). Parsed mosaics always have at least one row and column; zero-row
/// values only arise as degenerate results (executing an empty card).
class Mosaic {
public:
    Mosaic() = default;

    Mosaic(int rows, int columns) : rows_(rows), cols_(columns) {
        if (rows < 0 || columns < 0) throw std::invalid_argument("Mosaic: negative dimensions");
        cells_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(columns));
    }

    int rows() const { return rows_; }
    int columns() const { return cols_; }

    /// row counted from the bottom, column from the left; bounds-checked.
    const Cell& at(int row, int col) const { return cells_.at(index(row, col)); }
    Cell& at(int row, int col) { return cells_.at(index(row, col)); }

    bool operator==(const Mosaic&) const = default;

private:
    std::size_t index(int row, int col) const {
        if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
            throw std::out_of_range("Mosaic::at: cell outside grid");
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(col);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Cell> cells_;
};

/// Text form: one line per row, TOP row first, characters Y R B W K and '.'
/// for an empty cell. No trailing newline.
inline Mosaic mosaic_parse(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    for (std::string line; std::getline(stream, line);) lines.push_back(line);

    if (lines.empty()) fail(errc::empty_mosaic, "mosaic text has no lines");
    const std::size_t width = lines.front().size();
    if (width == 0) fail(errc::empty_mosaic, "mosaic rows have zero width");

    const int rows = static_cast<int>(lines.size());
    Mosaic m(rows, static_cast<int>(width));
    for (int i = 0; i < rows; ++i) {
        const std::string& line = lines[static_cast<std::size_t>(i)];
        if (line.size() != width)
            fail(errc::ragged_lines, "line " + std::to_string(i + 1) + " has length " +
                                         std::to_string(line.size()) + ", expected " +
                                         std::to_string(width));
        const int row = rows - 1 - i;  // first text line is the top row
        for (int col = 0; col < static_cast<int>(width); ++col) {
            const char ch = line[static_cast<std::size_t>(col)];
            if (ch != '.') m.at(row, col) = color_from_code(ch);
        }
    }
    return m;
}

inline std::string mosaic_render(const Mosaic& m) {
    std::string out;
    for (int row = m.rows() - 1; row >= 0; --row) {
        for (int col = 0; col < m.columns(); ++col) out += cell_code(m.at(row, col));
        if (row > 0) out += '\n';
    }
    return out;
}

/// True when every column is packed from the bottom: no filled cell above an
/// empty one. Checkable, never enforced.
inline bool gravity_ok(const Mosaic& m) {
    for (int col = 0; col < m.columns(); ++col) {
        bool seen_empty = false;
        for (int row = 0; row < m.rows(); ++row) {
            if (!m.at(row, col))
                seen_empty = true;
            else if (seen_empty)
                return false;
        }
    }
    return true;
}

inline std::array<int, 5> color_counts(const Mosaic& m) {
    std::array<int, 5> counts{};
    for (int row = 0; row < m.rows(); ++row)
        for (int col = 0; col < m.columns(); ++col)
            if (const Cell& cell = m.at(row, col)) counts[static_cast<std::size_t>(*cell)]++;
    return counts;
}

/// Available balls per color. The boxed set ships 64 yellow, 64 red, 64 blue,
/// 16 white and 16 black.
struct Inventory {
    std::array<int, 5> caps{};

    static Inventory standard() { return Inventory{{64, 64, 64, 16, 16}}; }

    int cap(Color c) const { return caps[static_cast<std::size_t>(c)]; }
};

struct InventoryUsage {
    Color color;
    int used = 0;
    int cap = 0;

    bool operator==(const InventoryUsage&) const = default;
};

struct InventoryReport {
    std::array<InventoryUsage, 5> usage{};
    std::vector<InventoryUsage> violations;  // one entry per color with used > cap

    bool ok() const { return violations.empty(); }
};

inline InventoryReport inventory_check(const Mosaic& m,
                                       const Inventory& inv = Inventory::standard()) {
    const std::array<int, 5> used = color_counts(m);
    InventoryReport report;
    for (std::size_t i = 0; i < kAllColors.size(); ++i) {
        const InventoryUsage entry{kAllColors[i], used[i], inv.caps[i]};
        report.usage[i] = entry;
        if (entry.used > entry.cap) report.violations.push_back(entry);
    }
    return report;
}

/// Seeded gravity-valid mosaic generator, the engine behind `mosaic random`.
/// Colors are drawn without replacement from the inventory pool so the result
/// is always buildable with the boxed ball set. Draw order is pinned for
/// reproducibility: one height per column left to right (skipped when `full`),
/// then one color per ball, column by column, bottom up.
inline Mosaic random_mosaic(SplitMix64& rng, int rows, int columns, bool full,
                            const Inventory& inv = Inventory::standard()) {
    if (rows < 1 || columns < 1)
        throw std::invalid_argument("random_mosaic: dimensions must be positive");

    std::vector<int> heights(static_cast<std::size_t>(columns), rows);
    if (!full) {
        for (int col = 0; col < columns; ++col)
            heights[static_cast<std::size_t>(col)] =
                static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(rows) + 1));
    }

    std::array<int, 5> pool = inv.caps;
    long long remaining = 0;
    for (int n : pool) remaining += n;
    long long needed = 0;
    for (int h : heights) needed += h;
    if (needed > remaining)
        fail(errc::inventory_exceeded, std::to_string(needed) + " balls needed, " +
                                           std::to_string(remaining) + " in inventory");

    Mosaic m(rows, columns);
    for (int col = 0; col < columns; ++col) {
        for (int row = 0; row < heights[static_cast<std::size_t>(col)]; ++row) {
            std::uint64_t pick = draw_below(rng, static_cast<std::uint64_t>(remaining));
            for (std::size_t i = 0; i < pool.size(); ++i) {
                if (pick < static_cast<std::uint64_t>(pool[i])) {
                    m.at(row, col) = kAllColors[i];
                    pool[i]--;
                    remaining--;
                    break;
                }
                pick -= static_cast<std::uint64_t>(pool[i]);
            }
        }
    }
    return m;
}

}  // namespace pallino
