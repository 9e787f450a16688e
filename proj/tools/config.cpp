#include "config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace casimir_cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct LineContext {
  int line;
  std::string key;

  [[noreturn]] void error(const std::string& message) const {
    std::ostringstream os;
    os << "line " << line << ", field '" << key << "': " << message;
    throw ConfigError(os.str(), line, key);
  }

  double number(std::string_view word) const {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || ptr != word.data() + word.size() || !std::isfinite(v))
      error("expected a number, got '" + std::string(word) + "'");
    return v;
  }

  int integer(std::string_view word) const {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || ptr != word.data() + word.size())
      error("expected an integer, got '" + std::string(word) + "'");
    return v;
  }
};

PlateSpec parse_plate(const LineContext& ctx, const std::vector<std::string_view>& words) {
  if (words.empty()) ctx.error("missing plate kind");
  const std::string_view kind = words[0];
  auto expect_args = [&](std::size_t n) {
    if (words.size() != n + 1)
      ctx.error("plate kind '" + std::string(kind) + "' takes " + std::to_string(n) + " parameter(s)");
  };
  PlateSpec p;
  if (kind == "conductivity") {
    expect_args(1);
    p.kind = CASIMIR_PLATE_CONDUCTIVITY;
    if (words[1] == "sweep") {
      p.sweep_slot = true;
    } else {
      p.p1 = ctx.number(words[1]);
    }
  } else if (kind == "graphene") {
    expect_args(0);
    p.kind = CASIMIR_PLATE_CONDUCTIVITY;
    p.p1 = casimir_graphene_sigma();
  } else if (kind == "delta") {
    expect_args(2);
    p.kind = CASIMIR_PLATE_DELTA;
    p.p1 = ctx.number(words[1]);
    p.p2 = ctx.number(words[2]);
  } else if (kind == "pe") {
    expect_args(0);
    p.kind = CASIMIR_PLATE_PERFECT_ELECTRIC;
  } else if (kind == "pm") {
    expect_args(0);
    p.kind = CASIMIR_PLATE_PERFECT_MAGNETIC;
  } else if (kind == "transparent") {
    expect_args(0);
    p.kind = CASIMIR_PLATE_TRANSPARENT;
  } else {
    ctx.error("unknown plate kind '" + std::string(kind) +
              "' (expected conductivity, graphene, delta, pe, pm, transparent)");
  }
  if (p.p1 < 0.0 || p.p2 < 0.0) ctx.error("plate parameters must be >= 0");
  return p;
}

}  // namespace

std::vector<double> SweepSpec::grid() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(points, 0)));
  for (int i = 0; i < points; ++i) {
    const double f = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    out.push_back(scale == SweepScale::Log ? start * std::pow(stop / start, f) : start + (stop - start) * f);
  }
  if (points > 1) out.back() = stop;
  return out;
}

casimir_quadrature RunConfig::quadrature() const {
  casimir_quadrature q = casimir_default_quadrature();
  if (rel_tol) q.rel_tol = *rel_tol;
  if (abs_tol) q.abs_tol = *abs_tol;
  if (max_subdivisions) q.max_subdivisions = *max_subdivisions;
  return q;
}

void check_config(const RunConfig& c) {
  if (c.plates.size() < 2) throw ConfigError("a stack needs at least two plates", 0, "plate");
  if (!c.gaps.empty() && c.gaps.size() != c.plates.size() - 1)
    throw ConfigError("expected " + std::to_string(c.plates.size() - 1) + " gaps, got " +
                          std::to_string(c.gaps.size()),
                      0, "gaps");
  for (double g : c.gaps)
    if (!(g > 0.0)) throw ConfigError("gaps must be > 0", 0, "gaps");
  if (c.method == CASIMIR_METHOD_IDEAL) {
    for (const auto& p : c.plates)
      if (p.kind != CASIMIR_PLATE_PERFECT_ELECTRIC && p.kind != CASIMIR_PLATE_PERFECT_MAGNETIC)
        throw ConfigError("method 'ideal' requires every plate to be pe or pm", 0, "method");
  }
  bool has_slot = false;
  for (const auto& p : c.plates) has_slot = has_slot || p.sweep_slot;
  if (c.sweep && !has_slot)
    throw ConfigError("sweep given but no plate is 'conductivity sweep'", 0, "sweep");
  if (!c.sweep && has_slot)
    throw ConfigError("'conductivity sweep' plate needs a sweep line", 0, "plate");
  if (c.sweep) {
    const auto& s = *c.sweep;
    if (s.points < 1) throw ConfigError("sweep needs at least one point", 0, "sweep");
    if (!(s.start > 0.0) || (s.points > 1 && !(s.stop > s.start)))
      throw ConfigError("sweep needs 0 < start < stop", 0, "sweep");
  }
  if (c.rel_tol && !(*c.rel_tol > 0.0)) throw ConfigError("rel_tol must be > 0", 0, "rel_tol");
  if (c.abs_tol && !(*c.abs_tol > 0.0)) throw ConfigError("abs_tol must be > 0", 0, "abs_tol");
  if (c.max_subdivisions && *c.max_subdivisions < 1)
    throw ConfigError("max_subdivisions must be >= 1", 0, "max_subdivisions");
}

RunConfig parse_config(std::string_view text) {
  RunConfig c;
  std::set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    LineContext ctx{line_no, std::string(trim(line.substr(0, eq == std::string_view::npos ? line.size() : eq)))};
    if (eq == std::string_view::npos) ctx.error("expected 'key = value'");
    const std::string_view value = trim(line.substr(eq + 1));
    const auto words = split_words(value);
    const std::string& key = ctx.key;
    if (key != "plate" && !seen.insert(key).second) ctx.error("duplicate key");

    if (key == "plate") {
      c.plates.push_back(parse_plate(ctx, words));
    } else if (key == "name") {
      c.name = std::string(value);
    } else if (key == "gaps") {
      if (words.empty()) ctx.error("expected at least one gap");
      for (auto w : words) {
        const double g = ctx.number(w);
        if (!(g > 0.0)) ctx.error("gaps must be > 0");
        c.gaps.push_back(g);
      }
    } else if (key == "method") {
      if (value == "auto") c.method = CASIMIR_METHOD_AUTO;
      else if (value == "polylog") c.method = CASIMIR_METHOD_POLYLOG;
      else if (value == "quadrature") c.method = CASIMIR_METHOD_QUADRATURE;
      else if (value == "ideal") c.method = CASIMIR_METHOD_IDEAL;
      else ctx.error("unknown method '" + std::string(value) + "' (auto, polylog, quadrature, ideal)");
    } else if (key == "sweep") {
      if (words.size() != 4) ctx.error("expected 'start stop points log|linear'");
      SweepSpec s{ctx.number(words[0]), ctx.number(words[1]), ctx.integer(words[2]), SweepScale::Log};
      if (words[3] == "linear") s.scale = SweepScale::Linear;
      else if (words[3] != "log") ctx.error("sweep scale must be 'log' or 'linear'");
      if (s.points < 1) ctx.error("sweep needs at least one point");
      if (!(s.start > 0.0) || (s.points > 1 && !(s.stop > s.start))) ctx.error("sweep needs 0 < start < stop");
      c.sweep = s;
    } else if (key == "output") {
      c.output = std::string(value);
    } else if (key == "rel_tol") {
      if (words.size() != 1) ctx.error("expected one number");
      c.rel_tol = ctx.number(words[0]);
      if (!(*c.rel_tol > 0.0)) ctx.error("must be > 0");
    } else if (key == "abs_tol") {
      if (words.size() != 1) ctx.error("expected one number");
      c.abs_tol = ctx.number(words[0]);
      if (!(*c.abs_tol > 0.0)) ctx.error("must be > 0");
    } else if (key == "max_subdivisions") {
      if (words.size() != 1) ctx.error("expected one integer");
      c.max_subdivisions = ctx.integer(words[0]);
      if (*c.max_subdivisions < 1) ctx.error("must be >= 1");
    } else {
      ctx.error("unknown key");
    }
  }
  check_config(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigIoError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ConfigIoError("failed reading config file '" + path + "'");
  return parse_config(buf.str());
}

std::string write_config(const RunConfig& c) {
  std::ostringstream os;
  if (!c.name.empty()) os << "name = " << c.name << '\n';
  for (const auto& p : c.plates) {
    os << "plate = ";
    switch (p.kind) {
      case CASIMIR_PLATE_CONDUCTIVITY:
        os << "conductivity " << (p.sweep_slot ? std::string("sweep") : format_number(p.p1));
        break;
      case CASIMIR_PLATE_DELTA: os << "delta " << format_number(p.p1) << ' ' << format_number(p.p2); break;
      case CASIMIR_PLATE_PERFECT_ELECTRIC: os << "pe"; break;
      case CASIMIR_PLATE_PERFECT_MAGNETIC: os << "pm"; break;
      case CASIMIR_PLATE_TRANSPARENT: os << "transparent"; break;
    }
    os << '\n';
  }
  if (!c.gaps.empty()) {
    os << "gaps =";
    for (double g : c.gaps) os << ' ' << format_number(g);
    os << '\n';
  }
  os << "method = " << casimir_method_name(c.method) << '\n';
  if (c.sweep) {
    os << "sweep = " << format_number(c.sweep->start) << ' ' << format_number(c.sweep->stop) << ' '
       << c.sweep->points << ' ' << (c.sweep->scale == SweepScale::Log ? "log" : "linear") << '\n';
  }
  if (c.rel_tol) os << "rel_tol = " << format_number(*c.rel_tol) << '\n';
  if (c.abs_tol) os << "abs_tol = " << format_number(*c.abs_tol) << '\n';
  if (c.max_subdivisions) os << "max_subdivisions = " << *c.max_subdivisions << '\n';
  if (!c.output.empty()) os << "output = " << c.output << '\n';
  return os.str();
}

}  // namespace casimir_cli
