#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pallino/grid.hpp"

namespace pallino {

/// Compass moves of the drawing language. O stands for West (Ovest).
enum class Direction : std::uint8_t { north, south, east, west };

inline constexpr char direction_code(Direction d) {
    constexpr char codes[] = {'N', 'S', 'E', 'O'};
    return codes[static_cast<std::size_t>(d)];
}

/// `repeat` copies of one move; a colored move fills the square moved into.
struct Instruction {
    Direction direction = Direction::east;
    std::optional<Color> paint;
    int repeat = 1;

    bool operator==(const Instruction&) const = default;
};

/// Flat program: loops repeat a single instruction, never a group. The
/// optional START directive colors the origin square, which no move can
/// reach.
struct TurtleProgram {
    std::optional<Color> start_paint;
    std::vector<Instruction> body;

    bool operator==(const TurtleProgram&) const = default;
};

struct GridPos {
    int row = 0;
    int col = 0;

    bool operator==(const GridPos&) const = default;
};

/// Drawing surface. Row 0 is the TOP row (programs start at the upper left),
/// unlike Mosaic which counts rows from the bottom.
class ColorGrid {
public:
    ColorGrid() = default;

    ColorGrid(int width, int height) : w_(width), h_(height) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("ColorGrid: dimensions must be positive");
        cells_.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
    }

    int width() const { return w_; }
    int height() const { return h_; }

    const Cell& at(int row, int col) const { return cells_.at(index(row, col)); }
    Cell& at(int row, int col) { return cells_.at(index(row, col)); }

    bool contains(GridPos p) const { return p.row >= 0 && p.row < h_ && p.col >= 0 && p.col < w_; }

    bool operator==(const ColorGrid&) const = default;

private:
    std::size_t index(int row, int col) const {
        if (row < 0 || row >= h_ || col < 0 || col >= w_)
            throw std::out_of_range("ColorGrid::at: cell outside grid");
        return static_cast<std::size_t>(row) * static_cast<std::size_t>(w_) +
               static_cast<std::size_t>(col);
    }

    int w_ = 0;
    int h_ = 0;
    std::vector<Cell> cells_;
};

struct PaintedGrid {
    ColorGrid grid;
    GridPos cursor;

    bool operator==(const PaintedGrid&) const = default;
};

namespace detail {

inline std::optional<Direction> direction_from_token(const std::string& token) {
    if (token.size() != 1) return std::nullopt;
    switch (std::toupper(static_cast<unsigned char>(token[0]))) {
        case 'N': return Direction::north;
        case 'S': return Direction::south;
        case 'E': return Direction::east;
        case 'O': return Direction::west;
    }
    return std::nullopt;
}

inline std::optional<Color> color_from_token(const std::string& token) {
    std::string lower = token;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (auto by_name = color_from_name(lower)) return by_name;
    if (token.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(token[0]))) {
            case 'Y': return Color::yellow;
            case 'R': return Color::red;
            case 'B': return Color::blue;
            case 'W': return Color::white;
            case 'K': return Color::black;
        }
    }
    return std::nullopt;
}

inline int parse_repeat(const std::string& digits) {
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail(errc::bad_count, "repeat count '" + digits + "' is not an integer");
    if (digits.size() > 6) fail(errc::bad_count, "repeat count '" + digits + "' is too large");
    const int n = std::stoi(digits);
    if (n < 1) fail(errc::bad_count, "repeat count must be at least 1, got " + digits);
    return n;
}

inline bool iequals(const std::string& a, const char* b) {
    std::size_t i = 0;
    for (; i < a.size() && b[i] != '\0'; ++i)
        if (std::toupper(static_cast<unsigned char>(a[i])) !=
            std::toupper(static_cast<unsigned char>(b[i])))
            return false;
    return i == a.size() && b[i] == '\0';
}

}  // namespace detail

/// Text form: whitespace-separated tokens. An optional leading `START <color>`
/// precedes instructions `D`, `D <color>`, `(D)n` or `(D <color>)n` with
/// D one of N S E O. Colors are full names or one-letter codes.
inline TurtleProgram turtle_parse(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream stream(text);
    for (std::string token; stream >> token;) tokens.push_back(token);

    TurtleProgram program;
    std::size_t i = 0;

    if (i < tokens.size() && detail::iequals(tokens[i], "START")) {
        ++i;
        if (i >= tokens.size()) fail(errc::bad_token, "START needs a color");
        const auto color = detail::color_from_token(tokens[i]);
        if (!color) fail(errc::bad_token, "START: '" + tokens[i] + "' is not a color");
        program.start_paint = color;
        ++i;
    }

    while (i < tokens.size()) {
        const std::string& token = tokens[i];

        if (token[0] == '(') {
            // Grouped form. The count is glued to the ')' in the same token,
            // e.g. "(E)3" whole or "(E" followed by "blue)3".
            std::string inner = token.substr(1);
            std::optional<Color> paint;
            std::string count_digits;

            const std::size_t close = inner.find(')');
            if (close != std::string::npos) {
                count_digits = inner.substr(close + 1);
                inner = inner.substr(0, close);
            } else {
                ++i;
                if (i >= tokens.size())
                    fail(errc::dangling_paren, "'(" + inner + "' is never closed");
                const std::string& second = tokens[i];
                const std::size_t close2 = second.find(')');
                if (close2 == std::string::npos)
                    fail(errc::dangling_paren, "'(" + inner + " " + second + "' is never closed");
                const std::string color_part = second.substr(0, close2);
                paint = detail::color_from_token(color_part);
                if (!paint) fail(errc::bad_token, "'" + color_part + "' is not a color");
                count_digits = second.substr(close2 + 1);
            }

            const auto direction = detail::direction_from_token(inner);
            if (!direction) fail(errc::bad_token, "'" + inner + "' is not a direction");
            program.body.push_back(Instruction{*direction, paint, detail::parse_repeat(count_digits)});
            ++i;
            continue;
        }

        if (token.find(')') != std::string::npos)
            fail(errc::dangling_paren, "')' in '" + token + "' has no matching '('");
        if (token.find('(') != std::string::npos)
            fail(errc::bad_token, "'(' must start a token, got '" + token + "'");

        const auto direction = detail::direction_from_token(token);
        if (!direction) fail(errc::bad_token, "'" + token + "' is not an instruction");
        std::optional<Color> paint;
        if (i + 1 < tokens.size()) {
            if (auto color = detail::color_from_token(tokens[i + 1])) {
                paint = color;
                ++i;
            }
        }
        program.body.push_back(Instruction{*direction, paint, 1});
        ++i;
    }
    return program;
}

/// Canonical text: unrepeated moves print bare, repeated ones parenthesized,
/// colors as lowercase full names.
inline std::string turtle_print(const TurtleProgram& program) {
    std::string out;
    const auto append = [&out](const std::string& piece) {
        if (!out.empty()) out += ' ';
        out += piece;
    };
    if (program.start_paint) append(std::string("START ") + color_name(*program.start_paint));
    for (const Instruction& ins : program.body) {
        std::string item;
        item += direction_code(ins.direction);
        if (ins.paint) item += std::string(" ") + color_name(*ins.paint);
        if (ins.repeat > 1) item = "(" + item + ")" + std::to_string(ins.repeat);
        append(item);
    }
    return out;
}

/// Run the program on a width x height grid. The cursor starts at the upper
/// left (0,0); each step moves one square and, for colored moves, fills the
/// square moved into (last write wins). The first out-of-bounds move aborts
/// the whole run via OffGridError; no partial grid escapes.
inline PaintedGrid interpret(const TurtleProgram& program, int width, int height) {
    ColorGrid grid(width, height);
    GridPos cursor{0, 0};
    if (program.start_paint) grid.at(0, 0) = program.start_paint;

    for (std::size_t i = 0; i < program.body.size(); ++i) {
        const Instruction& ins = program.body[i];
        for (int step = 1; step <= ins.repeat; ++step) {
            GridPos next = cursor;
            switch (ins.direction) {
                case Direction::north: next.row--; break;
                case Direction::south: next.row++; break;
                case Direction::east: next.col++; break;
                case Direction::west: next.col--; break;
            }
            if (!grid.contains(next))
                throw OffGridError(static_cast<int>(i) + 1, step, next.row, next.col);
            cursor = next;
            if (ins.paint) grid.at(cursor.row, cursor.col) = ins.paint;
        }
    }
    return PaintedGrid{std::move(grid), cursor};
}

/// Fold consecutive instructions that share direction and paint into one
/// repeated instruction. Semantics are unchanged; output has no adjacent
/// mergeable pair.
inline TurtleProgram compress(const TurtleProgram& program) {
    TurtleProgram out;
    out.start_paint = program.start_paint;
    for (const Instruction& ins : program.body) {
        if (!out.body.empty() && out.body.back().direction == ins.direction &&
            out.body.back().paint == ins.paint)
            out.body.back().repeat += ins.repeat;
        else
            out.body.push_back(ins);
    }
    return out;
}

/// Write a program that repaints the grid exactly: boustrophedon scan (row 0
/// left to right, row 1 right to left, ...) needs no repositioning moves.
/// Visited empty cells become plain moves. Output is loop-compressed.
inline TurtleProgram compile(const ColorGrid& grid) {
    TurtleProgram program;
    program.start_paint = grid.at(0, 0);

    const auto move = [&](Direction d, int row, int col) {
        program.body.push_back(Instruction{d, grid.at(row, col), 1});
    };

    for (int row = 0; row < grid.height(); ++row) {
        const bool rightwards = (row % 2 == 0);
        if (row > 0) move(Direction::south, row, rightwards ? 0 : grid.width() - 1);
        if (rightwards)
            for (int col = 1; col < grid.width(); ++col) move(Direction::east, row, col);
        else
            for (int col = grid.width() - 2; col >= 0; --col) move(Direction::west, row, col);
    }
    return compress(program);
}

/// Mosaic rows count from the bottom, drawing grids from the top.
inline ColorGrid to_color_grid(const Mosaic& m) {
    ColorGrid grid(m.columns(), m.rows());
    for (int row = 0; row < m.rows(); ++row)
        for (int col = 0; col < m.columns(); ++col)
            grid.at(m.rows() - 1 - row, col) = m.at(row, col);
    return grid;
}

inline Mosaic to_mosaic(const ColorGrid& grid) {
    Mosaic m(grid.height(), grid.width());
    for (int row = 0; row < grid.height(); ++row)
        for (int col = 0; col < grid.width(); ++col)
            m.at(grid.height() - 1 - row, col) = grid.at(row, col);
    return m;
}

/// Grid text: one line per row, top row first, same characters as mosaics.
inline std::string grid_render(const ColorGrid& grid) {
    std::string out;
    for (int row = 0; row < grid.height(); ++row) {
        if (row > 0) out += '\n';
        for (int col = 0; col < grid.width(); ++col) out += cell_code(grid.at(row, col));
    }
    return out;
}

}  // namespace pallino
