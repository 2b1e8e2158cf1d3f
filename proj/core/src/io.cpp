#include "mrta/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace mrta::io {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

// Lines of tokens; comments and blank lines dropped, positions retained.
class TokenLines {
 public:
  explicit TokenLines(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      std::vector<Token> tokens;
      std::size_t pos = 0;
      while (pos < raw.size()) {
        if (raw[pos] == '#') break;
        if (std::isspace(static_cast<unsigned char>(raw[pos]))) {
          ++pos;
          continue;
        }
        std::size_t end = pos;
        while (end < raw.size() && !std::isspace(static_cast<unsigned char>(raw[end])) &&
               raw[end] != '#') {
          ++end;
        }
        tokens.push_back({raw.substr(pos, end - pos), line_no, static_cast<int>(pos) + 1});
        pos = end;
      }
      if (!tokens.empty()) lines_.push_back(std::move(tokens));
    }
    last_line_ = line_no;
  }

  bool done() const { return next_ >= lines_.size(); }

  const std::vector<Token>& take(const std::string& what) {
    if (done()) throw ParseError(last_line_ + 1, 1, "unexpected end of file, expected " + what);
    return lines_[next_++];
  }

  const std::vector<Token>& peek() const { return lines_[next_]; }

 private:
  std::vector<std::vector<Token>> lines_;
  std::size_t next_ = 0;
  int last_line_ = 0;
};

std::int64_t parse_int(const Token& tok, const std::string& what) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(tok.line, tok.column, "expected " + what + ", found '" + tok.text + "'");
  }
  return value;
}

void expect_width(const std::vector<Token>& line, std::size_t width, const std::string& what) {
  if (line.size() != width) {
    const Token& anchor = line.size() > width ? line[width] : line.back();
    throw ParseError(anchor.line, line.size() > width ? anchor.column : anchor.column + 1,
                     "expected " + what);
  }
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
  TokenLines lines(text);
  ParsedInstance out;
  Instance& inst = out.instance;

  // robots
  {
    const auto& line = lines.take("'robots <n>'");
    if (line[0].text != "robots") {
      throw ParseError(line[0].line, line[0].column, "expected 'robots'");
    }
    if (line.size() != 2 && !(line.size() == 3 && line[2].text == "points")) {
      throw ParseError(line.back().line, line.back().column,
                       "expected 'robots <n>' or 'robots <n> points'");
    }
    const std::int64_t n = parse_int(line[1], "robot count");
    if (n < 0) throw ParseError(line[1].line, line[1].column, "robot count below 0");
    inst.robot_count = static_cast<int>(n);
    if (line.size() == 3) {
      LocationTag loc;
      for (int i = 0; i < inst.robot_count; ++i) {
        const auto& pt = lines.take("a robot point 'x y'");
        expect_width(pt, 2, "a robot point 'x y'");
        loc.robot_points.push_back({parse_int(pt[0], "x"), parse_int(pt[1], "y")});
      }
      inst.locations = std::move(loc);
    }
  }

  // tasks
  {
    const auto& line = lines.take("'tasks <m>'");
    if (line[0].text != "tasks") {
      throw ParseError(line[0].line, line[0].column, "expected 'tasks'");
    }
    const bool with_points = line.size() == 3 && line[2].text == "points";
    if (line.size() != 2 && !with_points) {
      throw ParseError(line.back().line, line.back().column,
                       "expected 'tasks <m>' or 'tasks <m> points'");
    }
    if (with_points && !inst.locations) {
      throw ParseError(line[2].line, line[2].column, "task points require robot points");
    }
    const std::int64_t m = parse_int(line[1], "task count");
    if (m < 0) throw ParseError(line[1].line, line[1].column, "task count below 0");
    for (int j = 0; j < m; ++j) {
      const auto& row = lines.take("a task line");
      expect_width(row, with_points ? 3 : 1,
                   with_points ? "a task line '<q> <x> <y>'" : "a task line '<q>'");
      inst.requirements.push_back(static_cast<int>(parse_int(row[0], "requirement")));
      if (with_points) {
        inst.locations->task_points.push_back(
            {parse_int(row[1], "x"), parse_int(row[2], "y")});
      }
    }
  }

  // costs
  {
    const auto& line = lines.take("'costs matrix|symmetric|location'");
    if (line[0].text != "costs") {
      throw ParseError(line[0].line, line[0].column, "expected 'costs'");
    }
    if (line.size() < 2) {
      throw ParseError(line[0].line, line[0].column + 6,
                       "expected cost form matrix|symmetric|location");
    }
    const std::string& form = line[1].text;
    const int n = inst.robot_count;
    const int m = inst.task_count();
    if (form == "matrix") {
      expect_width(line, 2, "'costs matrix'");
      if (inst.locations) {
        throw ParseError(line[1].line, line[1].column, "point lists require 'costs location'");
      }
      inst.costs.assign(static_cast<std::size_t>(n), {});
      if (m > 0) {
        for (int i = 0; i < n; ++i) {
          const auto& row = lines.take("a cost row");
          expect_width(row, static_cast<std::size_t>(m), "a cost row with one entry per task");
          for (const Token& tok : row) inst.costs[i].push_back(parse_int(tok, "a cost"));
        }
      }
    } else if (form == "symmetric") {
      expect_width(line, 2, "'costs symmetric'");
      if (inst.locations) {
        throw ParseError(line[1].line, line[1].column, "point lists require 'costs location'");
      }
      std::vector<Cost> column;
      if (m > 0) {
        const auto& row = lines.take("the symmetric cost row");
        expect_width(row, static_cast<std::size_t>(m), "one symmetric cost per task");
        for (const Token& tok : row) column.push_back(parse_int(tok, "a cost"));
      }
      inst.costs.assign(static_cast<std::size_t>(n), column);
      inst.symmetric_costs = std::move(column);
    } else if (form == "location") {
      expect_width(line, 3, "'costs location <scale>'");
      if (!inst.locations || static_cast<int>(inst.locations->task_points.size()) != m) {
        throw ParseError(line[1].line, line[1].column,
                         "'costs location' requires robot and task points");
      }
      const std::int64_t scale = parse_int(line[2], "scale");
      if (scale < 0) throw ParseError(line[2].line, line[2].column, "scale below 0");
      inst.locations->scale = scale;
      inst.costs.assign(static_cast<std::size_t>(n),
                        std::vector<Cost>(static_cast<std::size_t>(m)));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
          inst.costs[i][j] = rounded_scaled_distance(inst.locations->robot_points[i],
                                                     inst.locations->task_points[j], scale);
        }
      }
    } else {
      throw ParseError(line[1].line, line[1].column,
                       "unknown cost form '" + form + "' (matrix|symmetric|location)");
    }
    if (form != "location") inst.locations.reset();
  }

  // budget
  {
    const auto& line = lines.take("'budget <kind> <W>'");
    if (line[0].text != "budget") {
      throw ParseError(line[0].line, line[0].column, "expected 'budget'");
    }
    expect_width(line, 3, "'budget total|per-task|per-robot <W>'");
    const auto kind = budget_kind_from_name(line[1].text);
    if (!kind) {
      throw ParseError(line[1].line, line[1].column,
                       "unknown budget kind '" + line[1].text + "'");
    }
    const std::int64_t value = parse_int(line[2], "budget value");
    if (value < 0) throw ParseError(line[2].line, line[2].column, "budget below 0");
    out.budget = {*kind, value};
  }

  if (!lines.done()) {
    const Token& tok = lines.peek()[0];
    throw ParseError(tok.line, tok.column, "unexpected content after budget");
  }

  if (inst.task_count() > 0 &&
      std::all_of(inst.requirements.begin(), inst.requirements.end(),
                  [&](int q) { return q == inst.requirements[0]; })) {
    inst.uniform_requirement = inst.requirements[0];
  }

  const auto violations = validate_instance(inst);
  if (!violations.empty()) {
    throw ParseError(1, 1, "invalid instance: " + violations.front());
  }
  return out;
}

std::string serialize_instance(const Instance& inst, const Budget& budget) {
  std::ostringstream out;
  const int n = inst.robot_count;
  const int m = inst.task_count();
  const bool located = inst.locations.has_value();

  out << "robots " << n << (located ? " points" : "") << "\n";
  if (located) {
    for (const Point& p : inst.locations->robot_points) out << p.x << " " << p.y << "\n";
  }
  out << "tasks " << m << (located ? " points" : "") << "\n";
  for (int j = 0; j < m; ++j) {
    out << inst.requirements[j];
    if (located) {
      out << " " << inst.locations->task_points[j].x << " "
          << inst.locations->task_points[j].y;
    }
    out << "\n";
  }
  if (located) {
    out << "costs location " << inst.locations->scale << "\n";
  } else if (inst.symmetric_costs) {
    out << "costs symmetric\n";
    for (int j = 0; j < m; ++j) out << (*inst.symmetric_costs)[j] << (j + 1 < m ? " " : "");
    if (m > 0) out << "\n";
  } else {
    out << "costs matrix\n";
    if (m > 0) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) out << inst.costs[i][j] << (j + 1 < m ? " " : "");
        out << "\n";
      }
    }
  }
  out << "budget " << budget_kind_name(budget.kind) << " " << budget.value << "\n";
  return out.str();
}

}  // namespace mrta::io
