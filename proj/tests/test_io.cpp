#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "test_support.hpp"
#include "trilink/io.hpp"

using namespace trilink;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& content, const char* tag = "trilink") {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           (std::string(tag) + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
            ".txt");
    std::ofstream out(path, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("parses a commented header and plain edges") {
  TempFile file("# hdr\n0 1\n1 2\n");
  const auto [g, doc] = parse_edge_list(file.str());
  CHECK(g.node_count() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(doc.edge_count_raw == 2);
  CHECK(doc.dropped_self_loops == 0);
  CHECK(doc.dropped_duplicates == 0);
}

TEST_CASE("repairs self-loops with a counter") {
  TempFile file("5 5\n");
  const auto [g, doc] = parse_edge_list(file.str());
  CHECK(g.node_count() == 1);
  CHECK(g.edge_count() == 0);
  CHECK(doc.dropped_self_loops == 1);
}

TEST_CASE("counts reversed duplicates and reconciles totals") {
  TempFile file("0 1\n1 0\n1 2\n1 2\n3 3\n");
  const auto [g, doc] = parse_edge_list(file.str());
  CHECK(g.edge_count() == 2);
  CHECK(doc.dropped_duplicates == 2);
  CHECK(doc.dropped_self_loops == 1);
  CHECK(doc.edge_count_raw == g.edge_count() + doc.dropped_self_loops + doc.dropped_duplicates);
  CHECK(doc.symmetrized);
}

TEST_CASE("malformed lines are reported with their number") {
  TempFile bad_tokens("0 1\n0 1 2\n");
  CHECK_THROWS_WITH_AS(parse_edge_list(bad_tokens.str()), doctest::Contains(":2"),
                       std::runtime_error);
  TempFile one_token("0 1\n\n7\n");
  CHECK_THROWS_WITH_AS(parse_edge_list(one_token.str()), doctest::Contains(":3"),
                       std::runtime_error);
  CHECK_THROWS_AS(parse_edge_list("/nonexistent/file.txt"), std::runtime_error);
}

TEST_CASE("numeric ids are remapped densely in sorted order") {
  TempFile file("30 10\n10 20\n");
  const auto [g, doc] = parse_edge_list(file.str());
  CHECK(g.node_count() == 3);
  CHECK(doc.numeric_ids());
  CHECK(doc.to_dense("10") == NodeId{0});
  CHECK(doc.to_dense("20") == NodeId{1});
  CHECK(doc.to_dense("30") == NodeId{2});
  CHECK_FALSE(doc.to_dense("11").has_value());
  CHECK(doc.raw_id(2) == "30");
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("token ids fall back to lexicographic order") {
  TempFile file("beta alpha\nbeta gamma\n");
  const auto [g, doc] = parse_edge_list(file.str());
  CHECK_FALSE(doc.numeric_ids());
  CHECK(g.node_count() == 3);
  CHECK(doc.to_dense("alpha") == NodeId{0});
  CHECK(doc.to_dense("beta") == NodeId{1});
  CHECK(doc.to_dense("gamma") == NodeId{2});
  CHECK(doc.raw_id(0) == "alpha");
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
}

TEST_CASE("parsing is insensitive to line order") {
  TempFile a("5 9\n9 130\n2 5\n");
  TempFile b("9 130\n2 5\n5 9\n");
  const auto ga = parse_edge_list(a.str()).first;
  const auto gb = parse_edge_list(b.str()).first;
  CHECK(ga == gb);
}

TEST_CASE("writer emits the canonical ascending format") {
  TempFile out("");
  write_edge_list(support::complete_graph(3), out.str());
  CHECK(slurp(out.str()) == "0 1\n0 2\n1 2\n");

  write_edge_list(support::make_graph(5, {}), out.str());
  CHECK(slurp(out.str()).empty());
}

TEST_CASE("write then parse reproduces isolated-free graphs exactly") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const NodeId n = 2 + static_cast<NodeId>(rng() % 40);
    const auto g = support::make_graph(n, support::random_connected_edges(n, n / 2, rng));
    TempFile out("");
    write_edge_list(g, out.str());
    const auto [parsed, doc] = parse_edge_list(out.str());
    CHECK(parsed == g);
    CHECK(doc.edge_count_raw == g.edge_count());
  }
}

TEST_CASE("split files load, validate, and reject positive/negative overlap") {
  TempFile positives("0 1\n2 3\n4 5\n");
  TempFile negatives("0 2\n1 3\n");
  const auto [pos, neg] = load_split_files(positives.str(), negatives.str(), 6);
  CHECK(pos.size() == 3);
  CHECK(neg.size() == 2);
  CHECK(pos.front() == Edge{0, 1});

  TempFile overlapping("0 2\n2 3\n");
  CHECK_THROWS_WITH_AS(load_split_files(positives.str(), overlapping.str(), 6),
                       doctest::Contains("duplicates a positive"), std::runtime_error);

  TempFile out_of_range("0 9\n");
  CHECK_THROWS_AS(load_split_files(positives.str(), out_of_range.str(), 6), std::runtime_error);
  TempFile self_pair("2 2\n");
  CHECK_THROWS_AS(load_split_files(self_pair.str(), negatives.str(), 6), std::runtime_error);
}

TEST_CASE("pair lists can be remapped through an ingest document") {
  TempFile graph_file("100 200\n200 300\n");
  const auto [g, doc] = parse_edge_list(graph_file.str());
  TempFile pairs("100 300\n");
  const auto loaded = load_pair_list(pairs.str(), g.node_count(), &doc);
  CHECK(loaded == std::vector<Edge>{{0, 2}});

  TempFile unknown("100 999\n");
  CHECK_THROWS_WITH_AS(load_pair_list(unknown.str(), g.node_count(), &doc),
                       doctest::Contains("id map"), std::runtime_error);
}

TEST_CASE("report serialization carries the full schema") {
  EvalReport report;
  report.dataset = "demo";
  report.n = 10;
  report.e = 20;
  report.avcc = 0.125;
  report.regime = "DegreeDependent";
  MethodReport method;
  method.name = "hei";
  method.alpha = 0.5;
  method.auc = auc_from_counts(100, 50, 10);
  method.hits.push_back({20, 0.25});
  report.methods.push_back(method);

  const auto j = eval_report_json(report);
  CHECK(j["dataset"] == "demo");
  CHECK(j["avcc"] == 0.125);
  CHECK(j["methods"][0]["name"] == "hei");
  CHECK(j["methods"][0]["auc"] == 0.55);
  CHECK(j["methods"][0]["m_strict"] == 50);
  CHECK(j["methods"][0]["hits"]["20"] == 0.25);
  CHECK(j["recommendation"]["regime"] == "DegreeDependent");

  const auto csv = eval_report_csv(report);
  CHECK(csv ==
        "dataset,n,e,avcc,method,alpha,auc,m,m_strict,m_tie,regime,hits_20\n"
        "demo,10,20,0.125,hei,0.5,0.55,100,50,10,DegreeDependent,0.25\n");
}
