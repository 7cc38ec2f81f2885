#include "djc/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "djc/error.hpp"

namespace djc {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

long parse_int(std::string_view tok, int line) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) parse_fail(line, "bad integer '" + std::string(tok) + "'");
  return v;
}

VertexId parse_vertex(std::string_view tok, int line) {
  const long v = parse_int(tok, line);
  if (v < 0 || v > 0x7fffffffL) parse_fail(line, "vertex id out of range");
  return static_cast<VertexId>(v);
}

Rational parse_coord(std::string_view tok, int line) {
  try {
    return parse_rational(tok);
  } catch (const Error&) {
    parse_fail(line, "bad number '" + std::string(tok) + "'");
  }
}

// Calls fn(line_number, tokens) for every non-empty line with comments removed.
template <typename Fn>
void for_each_line(std::string_view text, Fn fn) {
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokenize(line);
    if (!toks.empty()) fn(number, toks);
    if (end == text.size()) break;
    start = end + 1;
  }
}

std::string join(const std::vector<VertexId>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace

SceneFile parse_scene(std::string_view text) {
  SceneFile out;
  std::vector<std::vector<VertexId>> cells;
  VertexId top = -1;
  for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
    if (t[0] == "f") {
      if (t.size() < 4) parse_fail(line, "a cell needs at least 3 vertices");
      std::vector<VertexId> cell;
      for (std::size_t i = 1; i < t.size(); ++i) cell.push_back(parse_vertex(t[i], line));
      for (VertexId v : cell) top = std::max(top, v);
      cells.push_back(std::move(cell));
    } else if (t[0] == "c") {
      Path p;
      std::size_t last = t.size();
      if (last > 1 && t[last - 1] == "closed") {
        p.closed = true;
        --last;
      }
      for (std::size_t i = 1; i < last; ++i) p.vertices.push_back(parse_vertex(t[i], line));
      if (p.vertices.empty()) parse_fail(line, "empty curve");
      out.curves.push_back(std::move(p));
    } else if (t[0] == "coord") {
      if (t.size() != 4) parse_fail(line, "expected: coord v x y");
      const VertexId v = parse_vertex(t[1], line);
      top = std::max(top, v);
      out.coords.emplace_back(v, Point2{parse_coord(t[2], line), parse_coord(t[3], line)});
    } else if (t[0] == "p") {
      if (t.size() != 3) parse_fail(line, "expected: p x y");
      out.polygon.push_back(Point2{parse_coord(t[1], line), parse_coord(t[2], line)});
    } else {
      parse_fail(line, "unknown record '" + std::string(t[0]) + "'");
    }
  });
  out.surface = Surface(top + 1, std::move(cells));
  return out;
}

std::string write_surface(const Surface& surface) {
  std::vector<std::vector<VertexId>> cells;
  for (CellId c = 0; c < surface.cell_count(); ++c) cells.push_back(canonical_rotation(surface.cell(c)));
  std::sort(cells.begin(), cells.end());
  std::string out;
  for (const auto& cell : cells) out += "f " + join(cell) + "\n";
  return out;
}

std::string write_curve(const Path& curve) {
  return "c " + join(curve.vertices) + (curve.closed ? " closed\n" : "\n");
}

std::string write_polygon(const std::vector<Point2>& polygon) {
  std::string out;
  for (const auto& p : polygon) out += "p " + format_rational(p.x) + " " + format_rational(p.y) + "\n";
  return out;
}

std::string write_embedded(const EmbeddedComplex& embedded, const std::vector<Path>& curves) {
  std::string out = write_surface(embedded.surface);
  for (std::size_t v = 0; v < embedded.coords.size(); ++v)
    out += "coord " + std::to_string(v) + " " + format_rational(embedded.coords[v].x) + " " +
           format_rational(embedded.coords[v].y) + "\n";
  for (const auto& c : curves) out += write_curve(c);
  return out;
}

EmbeddedComplex embedded_from_scene(const SceneFile& scene) {
  EmbeddedComplex ec;
  ec.surface = scene.surface;
  const int n = scene.surface.vertex_count();
  ec.coords.assign(n, Point2{});
  ec.provenance.assign(n, {});
  std::vector<char> seen(n, 0);
  for (const auto& [v, p] : scene.coords) {
    ec.coords[v] = p;
    seen[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw Error(ErrorCode::Parse, "vertex " + std::to_string(v) + " has no coordinates");
  return ec;
}

std::string write_separation(const SeparationReport& report, Verdict verdict) {
  std::string out;
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    out += "component " + std::to_string(i) + " size " + std::to_string(report.components[i].size()) + ":";
    for (VertexId v : report.components[i]) out += " " + std::to_string(v);
    out += "\n";
  }
  out += "seeds a=" + std::to_string(report.seed_a) + " b=" + std::to_string(report.seed_b) + "\n";
  out += "verdict " + std::string(to_string(verdict)) + "\n";
  return out;
}

SeparationText parse_separation(std::string_view text) {
  SeparationText out;
  for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
    if (t[0] == "component") {
      if (t.size() < 4 || t[2] != "size" || t[3].empty() || t[3].back() != ':') parse_fail(line, "bad component line");
      if (parse_int(t[1], line) != static_cast<long>(out.components.size())) parse_fail(line, "components out of order");
      const long size = parse_int(t[3].substr(0, t[3].size() - 1), line);
      std::vector<VertexId> comp;
      for (std::size_t i = 4; i < t.size(); ++i) comp.push_back(parse_vertex(t[i], line));
      if (static_cast<long>(comp.size()) != size) parse_fail(line, "component size mismatch");
      out.components.push_back(std::move(comp));
    } else if (t[0] == "seeds") {
      if (t.size() != 3 || t[1].substr(0, 2) != "a=" || t[2].substr(0, 2) != "b=") parse_fail(line, "bad seeds line");
      out.seed_a = static_cast<VertexId>(parse_int(t[1].substr(2), line));
      out.seed_b = static_cast<VertexId>(parse_int(t[2].substr(2), line));
    } else if (t[0] == "verdict") {
      if (t.size() != 2) parse_fail(line, "bad verdict line");
      out.verdict = std::string(t[1]);
    } else {
      parse_fail(line, "unknown record '" + std::string(t[0]) + "'");
    }
  });
  return out;
}

std::string write_sequence(const DeformationSequence& sequence) {
  std::string out = sequence.kind == DeformationKind::Contraction ? "# contraction\n" : "# arc deformation\n";
  for (std::size_t i = 0; i < sequence.entries.size(); ++i) {
    out += "step " + std::to_string(i) + ":";
    for (VertexId v : sequence.entries[i].vertices) out += " " + std::to_string(v);
    out += sequence.entries[i].closed ? " closed\n" : "\n";
  }
  for (std::size_t i = 0; i < sequence.removed.size(); ++i)
    out += "witness " + std::to_string(i) + ": " + std::to_string(sequence.removed[i]) + "\n";
  return out;
}

DeformationSequence parse_sequence(std::string_view text) {
  DeformationSequence out;
  if (text.rfind("# arc deformation", 0) == 0) out.kind = DeformationKind::ArcDeformation;
  for_each_line(text, [&](int line, const std::vector<std::string_view>& t) {
    if (t.size() < 2 || t[1].empty() || t[1].back() != ':') parse_fail(line, "bad sequence line");
    const long index = parse_int(t[1].substr(0, t[1].size() - 1), line);
    if (t[0] == "step") {
      if (index != static_cast<long>(out.entries.size())) parse_fail(line, "steps out of order");
      Path p;
      std::size_t last = t.size();
      if (last > 2 && t[last - 1] == "closed") {
        p.closed = true;
        --last;
      }
      for (std::size_t i = 2; i < last; ++i) p.vertices.push_back(parse_vertex(t[i], line));
      out.entries.push_back(std::move(p));
    } else if (t[0] == "witness") {
      if (index != static_cast<long>(out.removed.size()) || t.size() != 3) parse_fail(line, "bad witness line");
      out.removed.push_back(static_cast<CellId>(parse_int(t[2], line)));
    } else {
      parse_fail(line, "unknown record '" + std::string(t[0]) + "'");
    }
  });
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "cannot read " + path);
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
}

}  // namespace djc
