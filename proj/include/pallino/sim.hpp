#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "pallino/grid.hpp"

namespace pallino {

/// Ideal-mechanics model of the ball machine: a 12-column screen plus a
/// visible feed queue whose front is the next ball the child sees. Exit and
/// Reset return balls to the BACK of the queue, so every run is
/// deterministic; randomize the initial feed to model a mixed reservoir.
/// Balls are never created or destroyed: grid plus feed always equals the
/// initial feed, as multisets.
class MachineState {
public:
    static constexpr int kColumns = 12;

    MachineState(const std::vector<Color>& feed, int rows)
        : grid_(rows, kColumns), feed_(feed.begin(), feed.end()) {
        if (rows < 1) throw std::invalid_argument("MachineState: rows must be positive");
        std::array<int, 5> counts{};
        for (Color c : feed) counts[static_cast<std::size_t>(c)]++;
        const Inventory inv = Inventory::standard();
        for (std::size_t i = 0; i < counts.size(); ++i)
            if (counts[i] > inv.caps[i])
                fail(errc::inventory_exceeded,
                     std::string(color_name(kAllColors[i])) + " x" + std::to_string(counts[i]) +
                         " exceeds the cap of " + std::to_string(inv.caps[i]));
    }

    const Mosaic& grid() const { return grid_; }
    const std::deque<Color>& feed() const { return feed_; }
    int rows() const { return grid_.rows(); }

    /// Number of balls stacked in a column, 1-based like the buttons.
    int column_height(int column) const {
        const int col = check_column(column);
        int height = 0;
        while (height < grid_.rows() && grid_.at(height, col)) ++height;
        return height;
    }

    bool operator==(const MachineState& other) const {
        return grid_ == other.grid_ && feed_ == other.feed_;
    }

private:
    static int check_column(int column) {
        if (column < 1 || column > kColumns)
            throw std::out_of_range("column must be 1-" + std::to_string(kColumns));
        return column - 1;
    }

    Mosaic grid_;
    std::deque<Color> feed_;

    friend MachineState launch(MachineState s, int column);
    friend MachineState exit_ball(MachineState s);
    friend MachineState reset_column(MachineState s, int column);
};

inline MachineState machine_new(const std::vector<Color>& feed, int rows) {
    return MachineState(feed, rows);
}

/// Hold the column button, press launch: the front feed ball drops onto the
/// column's stack.
inline MachineState launch(MachineState s, int column) {
    const int col = MachineState::check_column(column);
    if (s.feed_.empty()) fail(errc::empty_feed, "launch with no ball in the feed");
    const int height = s.column_height(column);
    if (height >= s.rows()) throw ColumnFullError(column);
    s.grid_.at(height, col) = s.feed_.front();
    s.feed_.pop_front();
    return s;
}

/// The Exit button discards the front ball; physically it returns to the
/// reservoir, here to the back of the queue.
inline MachineState exit_ball(MachineState s) {
    if (s.feed_.empty()) fail(errc::empty_feed, "exit with no ball in the feed");
    s.feed_.push_back(s.feed_.front());
    s.feed_.pop_front();
    return s;
}

/// The Reset cursor empties one column; its balls rejoin the feed in
/// bottom-up order. Resetting an empty column is a no-op.
inline MachineState reset_column(MachineState s, int column) {
    const int col = MachineState::check_column(column);
    for (int row = 0; row < s.rows(); ++row) {
        Cell& cell = s.grid_.at(row, col);
        if (!cell) break;
        s.feed_.push_back(*cell);
        cell.reset();
    }
    return s;
}

/// Detached copy of the screen, ready for diffing against a target card.
inline Mosaic snapshot(const MachineState& s) { return s.grid(); }

// ---------------------------------------------------------------------------
// Scripts
// ---------------------------------------------------------------------------

/// One script line: `L <1-12>` launch, `X` exit, `R <1-12>` reset, `P` peek.
struct ScriptCommand {
    enum class Kind { launch, exit, reset, peek };

    Kind kind = Kind::peek;
    int column = 0;  // launch/reset only
    int line = 0;    // source line, for diagnostics

    bool operator==(const ScriptCommand&) const = default;
};

inline std::vector<ScriptCommand> script_parse(const std::string& text) {
    std::vector<ScriptCommand> commands;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string op;
        if (!(tokens >> op)) continue;  // blank line

        ScriptCommand cmd;
        cmd.line = line_no;
        if (op == "L" || op == "R") {
            cmd.kind = op == "L" ? ScriptCommand::Kind::launch : ScriptCommand::Kind::reset;
            if (!(tokens >> cmd.column) || cmd.column < 1 || cmd.column > MachineState::kColumns)
                fail(errc::bad_script_syntax,
                     "line " + std::to_string(line_no) + ": " + op + " needs a column 1-" +
                         std::to_string(MachineState::kColumns));
        } else if (op == "X") {
            cmd.kind = ScriptCommand::Kind::exit;
        } else if (op == "P") {
            cmd.kind = ScriptCommand::Kind::peek;
        } else {
            fail(errc::bad_script_syntax,
                 "line " + std::to_string(line_no) + ": unknown command '" + op + "'");
        }
        std::string extra;
        if (tokens >> extra)
            fail(errc::bad_script_syntax,
                 "line " + std::to_string(line_no) + ": trailing '" + extra + "'");
        commands.push_back(cmd);
    }
    return commands;
}

struct ScriptFailure {
    std::size_t command_index = 0;  // 1-based position in the script
    int line = 0;
    errc code = errc::bad_script_syntax;
    std::string message;
};

/// Outcome of a script run. On a command failure `state` is the machine as it
/// stood BEFORE the failing command, so the lesson can show exactly where the
/// run stopped.
struct ScriptResult {
    MachineState state;
    std::vector<std::string> log;  // one color code per P command
    std::optional<ScriptFailure> failure;

    bool ok() const { return !failure.has_value(); }
};

/// Apply the whole script in order. Syntax is checked up front and throws;
/// command errors (empty feed, full column) abort execution and are reported
/// in the result instead.
inline ScriptResult run_script(MachineState s, const std::string& script) {
    const std::vector<ScriptCommand> commands = script_parse(script);
    ScriptResult result{std::move(s), {}, std::nullopt};
    for (std::size_t i = 0; i < commands.size(); ++i) {
        const ScriptCommand& cmd = commands[i];
        try {
            // Pass by copy: on a throw the pre-command state must survive.
            switch (cmd.kind) {
                case ScriptCommand::Kind::launch:
                    result.state = launch(result.state, cmd.column);
                    break;
                case ScriptCommand::Kind::exit:
                    result.state = exit_ball(result.state);
                    break;
                case ScriptCommand::Kind::reset:
                    result.state = reset_column(result.state, cmd.column);
                    break;
                case ScriptCommand::Kind::peek:
                    if (result.state.feed().empty())
                        fail(errc::empty_feed, "peek with no ball in the feed");
                    result.log.emplace_back(1, color_code(result.state.feed().front()));
                    break;
            }
        } catch (const Error& e) {
            result.failure = ScriptFailure{i + 1, cmd.line, e.code(), e.what()};
            break;
        }
    }
    return result;
}

/// Feed literal: color codes, optionally prefixed with the keyword FEED,
/// whitespace ignored. `FEED YYRRB` and `YYRRB` both read as five balls.
inline std::vector<Color> feed_parse(const std::string& text) {
    std::vector<Color> feed;
    std::istringstream stream(text);
    std::string token;
    bool first = true;
    while (stream >> token) {
        if (first && token == "FEED") {
            first = false;
            continue;
        }
        first = false;
        for (char ch : token) feed.push_back(color_from_code(ch));
    }
    return feed;
}

inline std::string feed_print(const std::deque<Color>& feed) {
    std::string out = "FEED";
    if (!feed.empty()) out += ' ';
    for (Color c : feed) out += color_code(c);
    return out;
}

/// Build a script that reproduces `target` from the given feed order:
/// column by column, bottom up, rotating unwanted balls to the back with X
/// until the needed color is in front. The target must be gravity-valid and
/// its balls a sub-multiset of the feed.
inline std::string synthesize_script(const Mosaic& target, const std::vector<Color>& feed) {
    if (target.columns() != MachineState::kColumns)
        throw std::invalid_argument("synthesize_script: target must have 12 columns");
    if (!gravity_ok(target))
        throw std::invalid_argument("synthesize_script: target is not gravity-valid");

    std::deque<Color> queue(feed.begin(), feed.end());
    std::string script;
    for (int col = 0; col < target.columns(); ++col) {
        for (int row = 0; row < target.rows(); ++row) {
            const Cell& cell = target.at(row, col);
            if (!cell) break;
            // Rotate until the needed color is in front.
            std::size_t spins = 0;
            while (spins < queue.size() && queue.front() != *cell) {
                queue.push_back(queue.front());
                queue.pop_front();
                script += "X\n";
                ++spins;
            }
            if (queue.empty() || queue.front() != *cell)
                throw std::invalid_argument(std::string("synthesize_script: feed has no ") +
                                            color_name(*cell) + " ball left");
            queue.pop_front();
            script += "L " + std::to_string(col + 1) + "\n";
        }
    }
    return script;
}

}  // namespace pallino
