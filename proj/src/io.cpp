#include "trilink/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace trilink {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r'; }

std::optional<std::int64_t> parse_i64(std::string_view token) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

// Calls fn(line_number, first_token, second_token) for every edge record.
template <class Fn>
void for_each_record(const std::string& path, const ParseOptions& options, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");

  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view{line};
    while (!view.empty() && is_space(view.front())) view.remove_prefix(1);
    while (!view.empty() && is_space(view.back())) view.remove_suffix(1);
    if (view.empty()) continue;
    if (!options.comment_prefix.empty() && view.starts_with(options.comment_prefix)) continue;

    std::string_view tokens[2];
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos < view.size()) {
      while (pos < view.size() && is_space(view[pos])) ++pos;
      if (pos >= view.size()) break;
      std::size_t start = pos;
      while (pos < view.size() && !is_space(view[pos])) ++pos;
      if (count < 2) tokens[count] = view.substr(start, pos - start);
      ++count;
    }
    if (count != 2)
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected two tokens, got " +
                               std::to_string(count));
    fn(line_no, tokens[0], tokens[1]);
  }
  if (in.bad()) throw std::runtime_error("read error on '" + path + "'");
}

template <class Id>
std::vector<Id> sorted_unique_ids(const std::vector<std::pair<Id, Id>>& edges) {
  std::vector<Id> ids;
  ids.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

template <class Id>
NodeId dense_of(const std::vector<Id>& sorted_ids, const Id& id) {
  const auto it = std::lower_bound(sorted_ids.begin(), sorted_ids.end(), id);
  return static_cast<NodeId>(it - sorted_ids.begin());
}

void check_node_limit(std::size_t unique_ids) {
  if (unique_ids > (std::uint64_t{1} << 32))
    throw std::runtime_error("edge list references more than 2^32 nodes");
}

}  // namespace

std::uint32_t EdgeListDocument::node_count() const {
  return static_cast<std::uint32_t>(numeric_ ? numeric_ids_.size() : token_ids_.size());
}

std::optional<NodeId> EdgeListDocument::to_dense(std::string_view token) const {
  if (numeric_) {
    const auto value = parse_i64(token);
    if (!value) return std::nullopt;
    const auto it = std::lower_bound(numeric_ids_.begin(), numeric_ids_.end(), *value);
    if (it == numeric_ids_.end() || *it != *value) return std::nullopt;
    return static_cast<NodeId>(it - numeric_ids_.begin());
  }
  const auto it = std::lower_bound(token_ids_.begin(), token_ids_.end(), token);
  if (it == token_ids_.end() || *it != token) return std::nullopt;
  return static_cast<NodeId>(it - token_ids_.begin());
}

std::string EdgeListDocument::raw_id(NodeId dense) const {
  if (numeric_) return std::to_string(numeric_ids_.at(dense));
  return token_ids_.at(dense);
}

std::pair<Graph, EdgeListDocument> parse_edge_list(const std::string& path,
                                                   const ParseOptions& options) {
  EdgeListDocument doc;
  doc.symmetrized = options.symmetrize;

  // Numeric fast path first: most dumps use integer ids, and storing
  // int64 pairs instead of token strings matters at millions of lines.
  struct NonNumericToken {};
  std::vector<std::pair<std::int64_t, std::int64_t>> numeric_edges;
  bool numeric_ok = true;
  try {
    for_each_record(path, options, [&](std::uint64_t, std::string_view a, std::string_view b) {
      const auto ia = parse_i64(a), ib = parse_i64(b);
      if (!ia || !ib) throw NonNumericToken{};  // reread in token mode
      numeric_edges.emplace_back(*ia, *ib);
    });
  } catch (NonNumericToken) {
    numeric_ok = false;
    numeric_edges.clear();
  }

  std::vector<Edge> dense_edges;
  if (numeric_ok) {
    doc.numeric_ = true;
    doc.numeric_ids_ = sorted_unique_ids(numeric_edges);
    check_node_limit(doc.numeric_ids_.size());
    dense_edges.reserve(numeric_edges.size());
    for (const auto& [a, b] : numeric_edges)
      dense_edges.emplace_back(dense_of(doc.numeric_ids_, a), dense_of(doc.numeric_ids_, b));
    doc.edge_count_raw = numeric_edges.size();
  } else {
    std::vector<std::pair<std::string, std::string>> token_edges;
    for_each_record(path, options, [&](std::uint64_t, std::string_view a, std::string_view b) {
      token_edges.emplace_back(std::string(a), std::string(b));
    });
    doc.numeric_ = false;
    doc.token_ids_ = sorted_unique_ids(token_edges);
    check_node_limit(doc.token_ids_.size());
    dense_edges.reserve(token_edges.size());
    for (const auto& [a, b] : token_edges)
      dense_edges.emplace_back(dense_of(doc.token_ids_, a), dense_of(doc.token_ids_, b));
    doc.edge_count_raw = token_edges.size();
  }

  auto built = build_graph(doc.node_count(), dense_edges);
  doc.dropped_self_loops = built.stats.dropped_self_loops;
  doc.dropped_duplicates = built.stats.dropped_duplicates;
  return {std::move(built.graph), std::move(doc)};
}

void write_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  g.for_each_edge([&](NodeId u, NodeId v) { out << u << ' ' << v << '\n'; });
  out.flush();
  if (!out) throw std::runtime_error("write failure on '" + path + "'");
}

std::vector<Edge> load_pair_list(const std::string& path, NodeId node_count,
                                 const EdgeListDocument* document) {
  std::vector<Edge> pairs;
  const ParseOptions options;
  for_each_record(path, options, [&](std::uint64_t line_no, std::string_view a, std::string_view b) {
    NodeId u, v;
    if (document != nullptr) {
      const auto du = document->to_dense(a), dv = document->to_dense(b);
      if (!du || !dv)
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": id not present in the graph's id map");
      u = *du;
      v = *dv;
    } else {
      const auto ia = parse_i64(a), ib = parse_i64(b);
      if (!ia || !ib || *ia < 0 || *ib < 0)
        throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected node ids");
      if (*ia >= node_count || *ib >= node_count)
        throw std::runtime_error(path + ":" + std::to_string(line_no) + ": node id out of range");
      u = static_cast<NodeId>(*ia);
      v = static_cast<NodeId>(*ib);
    }
    if (u >= node_count || v >= node_count)
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": node id out of range");
    if (u == v)
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": self pair not allowed");
    pairs.push_back(canonical_edge(u, v));
  });
  return pairs;
}

std::pair<std::vector<Edge>, std::vector<Edge>> load_split_files(
    const std::string& positives_path, const std::string& negatives_path, NodeId node_count,
    const EdgeListDocument* document) {
  auto positives = load_pair_list(positives_path, node_count, document);
  auto negatives = load_pair_list(negatives_path, node_count, document);

  std::vector<Edge> sorted_positives(positives);
  std::sort(sorted_positives.begin(), sorted_positives.end());
  for (const auto& e : negatives) {
    if (std::binary_search(sorted_positives.begin(), sorted_positives.end(), e))
      throw std::runtime_error("negative pair (" + std::to_string(e.first) + ", " +
                               std::to_string(e.second) + ") duplicates a positive");
  }
  return {std::move(positives), std::move(negatives)};
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

nlohmann::ordered_json eval_report_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["dataset"] = report.dataset;
  j["n"] = report.n;
  j["e"] = report.e;
  j["avcc"] = report.avcc;
  j["methods"] = nlohmann::ordered_json::array();
  for (const auto& method : report.methods) {
    nlohmann::ordered_json mj;
    mj["name"] = method.name;
    mj["alpha"] = method.alpha;
    mj["auc"] = method.auc.auc;
    mj["m"] = method.auc.m;
    mj["m_strict"] = method.auc.m_strict;
    mj["m_tie"] = method.auc.m_tie;
    mj["hits"] = nlohmann::ordered_json::object();
    for (const auto& h : method.hits) mj["hits"][std::to_string(h.k)] = h.hits;
    j["methods"].push_back(std::move(mj));
  }
  j["recommendation"] = {{"regime", report.regime},
                         {"lower", report.boundary_lower},
                         {"upper", report.boundary_upper}};
  return j;
}

std::string eval_report_csv(const EvalReport& report) {
  std::string out = "dataset,n,e,avcc,method,alpha,auc,m,m_strict,m_tie,regime";
  std::vector<std::uint64_t> ks;
  if (!report.methods.empty())
    for (const auto& h : report.methods.front().hits) ks.push_back(h.k);
  for (const auto k : ks) out += ",hits_" + std::to_string(k);
  out += "\n";

  for (const auto& method : report.methods) {
    out += report.dataset + "," + std::to_string(report.n) + "," + std::to_string(report.e) + "," +
           format_double(report.avcc) + "," + method.name + "," + format_double(method.alpha) +
           "," + format_double(method.auc.auc) + "," + std::to_string(method.auc.m) + "," +
           std::to_string(method.auc.m_strict) + "," + std::to_string(method.auc.m_tie) + "," +
           report.regime;
    for (const auto k : ks) {
      const auto it = std::find_if(method.hits.begin(), method.hits.end(),
                                   [&](const HitsResult& h) { return h.k == k; });
      out += ",";
      out += it != method.hits.end() ? format_double(it->hits) : "";
    }
    out += "\n";
  }
  return out;
}

}  // namespace trilink
