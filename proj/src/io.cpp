#include "sgc/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sgc/error.hpp"

namespace sgc {

namespace {

std::string label_comment(int v, const VertexLabel& label) {
  struct Visitor {
    int v;
    std::string operator()(const PlainLabel&) const { return {}; }
    std::string operator()(const GridLabel& l) const {
      return "# v " + std::to_string(v) + " grid " + std::to_string(l.layer) + " " +
             std::to_string(l.index) + "\n";
    }
    std::string operator()(const ApexLabel&) const { return "# v " + std::to_string(v) + " apex\n"; }
    std::string operator()(const RungLabel& l) const {
      return "# v " + std::to_string(v) + " rung " + std::to_string(l.index) + "\n";
    }
  };
  return std::visit(Visitor{v}, label);
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::string write_sgf(const SignedGraph& g) {
  std::ostringstream out;
  out << "sg " << g.order() << " " << g.size() << "\n";
  for (const auto& e : g.edges()) out << "e " << e.u << " " << e.v << " " << sign_char(e.sign) << "\n";
  for (int v = 0; v < g.order(); ++v) out << label_comment(v, g.label(v));
  return out.str();
}

SignedGraph read_sgf(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int declared_edges = 0;
  GraphData data;
  std::vector<std::pair<int, VertexLabel>> labels;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag.empty()) continue;
    if (tag[0] == '#') {
      std::string rest, kind;
      int v = 0;
      std::istringstream c(line.substr(1));
      if (c >> rest && rest == "v" && c >> v >> kind) {
        if (kind == "grid") {
          GridLabel l;
          if (c >> l.layer >> l.index) labels.emplace_back(v, l);
        } else if (kind == "apex") {
          labels.emplace_back(v, ApexLabel{});
        } else if (kind == "rung") {
          RungLabel l;
          if (c >> l.index) labels.emplace_back(v, l);
        }
      }
      continue;
    }
    if (!have_header) {
      if (tag != "sg" || !(fields >> data.n >> declared_edges) || data.n < 0 || declared_edges < 0) {
        parse_fail(line_no, "expected header 'sg <n> <m>'");
      }
      have_header = true;
      continue;
    }
    if (tag != "e") parse_fail(line_no, "expected edge line 'e <u> <v> <+|->'");
    Edge e;
    std::string sign, extra;
    if (!(fields >> e.u >> e.v >> sign) || (sign != "+" && sign != "-") || (fields >> extra)) {
      parse_fail(line_no, "malformed edge line");
    }
    e.sign = sign == "+" ? Sign::Positive : Sign::Negative;
    data.edges.push_back(e);
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing 'sg <n> <m>' header");
  if (static_cast<int>(data.edges.size()) != declared_edges) {
    throw Error(ErrorCode::ParseError, "header declares " + std::to_string(declared_edges) +
                                           " edges, found " + std::to_string(data.edges.size()));
  }
  if (!labels.empty()) {
    for (int v = 0; v < data.n; ++v) data.labels.emplace_back(PlainLabel{v});
    for (auto& [v, l] : labels) {
      if (v < 0 || v >= data.n) throw Error(ErrorCode::ParseError, "label for unknown vertex " + std::to_string(v));
      data.labels[v] = l;
    }
  }
  return SignedGraph(std::move(data));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

SignedGraph read_sgf_file(const std::string& path) { return read_sgf(read_text_file(path)); }

std::string write_dot(const SignedGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << " [label=\"" << to_string(g.label(v)) << "\"];\n";
  for (const auto& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v << " [sign=\"" << sign_char(e.sign) << "\", style="
        << (e.sign == Sign::Negative ? "solid" : "dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string coloring_to_json(const Coloring& c) {
  nlohmann::ordered_json j;
  j["p"] = c.pq.p;
  j["q"] = c.pq.q;
  j["assign"] = c.assign;
  return j.dump();
}

Coloring coloring_from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    Coloring c;
    c.pq = make_pq(j.at("p").get<int>(), j.at("q").get<int>());
    c.assign = j.at("assign").get<std::vector<int>>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad coloring JSON: ") + e.what());
  }
}

}  // namespace sgc
