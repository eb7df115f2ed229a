#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rng.hpp"

#include "movcone/errors.hpp"
#include "movcone/json_io.hpp"
#include "movcone/sweep.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace movcone;
namespace fs = std::filesystem;

namespace {

// p(total, parts) by the recurrence p(t, k) = p(t, k-1) + p(t-k, k)
std::uint64_t partition_count(int total, int parts) {
  std::vector<std::vector<std::uint64_t>> p(total + 1, std::vector<std::uint64_t>(parts + 1, 0));
  for (int k = 0; k <= parts; ++k)
    p[0][k] = 1;
  for (int t = 1; t <= total; ++t)
    for (int k = 1; k <= parts; ++k)
      p[t][k] = p[t][k - 1] + (t >= k ? p[t - k][k] : 0);
  return p[total][parts];
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "movcone_sweep_tests";
  fs::create_directories(dir);
  fs::path p = dir / name;
  fs::remove(p);
  return p;
}

std::string without_timing(const SweepReport& r) { return sweep_json(r, false).dump(); }

} // namespace

TEST_CASE("partition order") {
  using V = std::vector<std::vector<int>>;
  CHECK(enumerate_partitions(5, 3) == V{{5}, {1, 4}, {2, 3}, {1, 1, 3}, {1, 2, 2}});
  CHECK(enumerate_partitions(2, 1) == V{{2}});
  CHECK(enumerate_partitions(4, 4) == V{{4}, {1, 3}, {2, 2}, {1, 1, 2}, {1, 1, 1, 1}});
  CHECK(enumerate_partitions(1, 5) == V{{1}});
  CHECK_THROWS_AS(enumerate_partitions(0, 2), Error);
}

TEST_CASE("property: partition stream is complete and ordered") {
  for (int total = 1; total <= 14; ++total)
    for (int parts = 1; parts <= 8; ++parts) {
      auto all = enumerate_partitions(total, parts);
      CHECK(all.size() == partition_count(total, parts));
      for (std::size_t k = 0; k < all.size(); ++k) {
        const auto& p = all[k];
        int sum = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
          sum += p[i];
          CHECK(p[i] >= 1);
          if (i)
            CHECK(p[i - 1] <= p[i]);
        }
        CHECK(sum == total);
        CHECK(static_cast<int>(p.size()) <= parts);
        if (k) {
          const auto& q = all[k - 1];
          std::vector<int> a(parts - q.size(), 0), b(parts - p.size(), 0);
          a.insert(a.end(), q.begin(), q.end());
          b.insert(b.end(), p.begin(), p.end());
          CHECK(a < b);
        }
      }
    }
}

TEST_CASE("task verdicts") {
  TaskVerdict v = check_task({3, 5, {1, 2, 2}});
  CHECK(v.lorentzian);
  CHECK(v.inertia == Inertia{4, 1, 0});
  CHECK(check_task({2, 2, {2}}).inertia == Inertia{1, 1, 0});
  CHECK(check_task({2, 2, {1, 1}}).inertia == Inertia{1, 1, 0});
  CHECK(check_task({4, 3, {1, 1, 1}}).lorentzian);
  CHECK(is_anchor({4, 3, {1, 1, 1}}));
  CHECK(is_anchor({4, 3, {3}}));
  CHECK_FALSE(is_anchor({4, 3, {1, 2}}));
  CHECK_THROWS_AS(check_task({2, 3, {1, 1, 1}}), Error);
  CHECK_THROWS_AS(check_task({3, 3, {2, 1}}), Error);
  CHECK_THROWS_AS(check_task({3, 4, {1, 2}}), Error);
}

TEST_CASE("property: block reduction agrees with the full matrix") {
  testing_support::Rng rng(55);
  int count = 0;
  for (int n = 2; n <= 7; ++n)
    for (int j = 2; j <= 9; ++j)
      for (const auto& p : enumerate_partitions(j, n)) {
        SweepTask t{n, j, p};
        TaskVerdict a = check_task(t), b = check_task_naive(t);
        CHECK(a.inertia == b.inertia);
        CHECK(a.lorentzian == b.lorentzian);
        CHECK(a.lorentzian);
        ++count;
      }
  CHECK(count > 300);
}

TEST_CASE("single cell and totals") {
  SweepReport one = sweep({3, 3, 5, 5, 1, {}, {}, {}});
  CHECK(one.tasks == 5);
  CHECK(one.anchors == 1);
  CHECK(one.complete);
  CHECK(one.counterexamples.empty());

  SweepReport r = sweep({2, 12, 2, 9, 2, {}, {}, {}});
  std::uint64_t tasks = 0, anchors = 0;
  for (int n = 2; n <= 12; ++n)
    for (int j = 2; j <= 9; ++j) {
      tasks += partition_count(j, n);
      anchors += j <= n ? 2 : 1;
    }
  CHECK(r.tasks == tasks);
  CHECK(r.anchors == anchors);
  CHECK(r.counterexamples.empty());
  CHECK(r.seconds.has_value());
}

TEST_CASE("thread count does not change the report") {
  SweepOptions o{2, 14, 2, 10, 1, {}, {}, {}};
  std::string base = without_timing(sweep(o));
  for (int t : {2, 3, 8}) {
    o.threads = t;
    CHECK(without_timing(sweep(o)) == base);
  }
}

TEST_CASE("checkpoint resume") {
  fs::path ck = scratch("resume.json");
  SweepOptions o{2, 6, 2, 7, 2, ck, {}, {}};
  SweepOptions plain = o;
  plain.checkpoint.reset();
  std::string full = without_timing(sweep(plain));

  o.max_cells = 7;
  SweepReport partial = sweep(o);
  CHECK_FALSE(partial.complete);
  CHECK(fs::exists(ck));
  CHECK_FALSE(fs::exists(fs::path(ck.string() + ".tmp")));
  o.max_cells = 11;
  CHECK_FALSE(sweep(o).complete);
  o.max_cells.reset();
  SweepReport done = sweep(o);
  CHECK(done.complete);
  CHECK(without_timing(done) == full);
  // a finished checkpoint resumes to the same report without work
  CHECK(without_timing(sweep(o)) == full);

  SweepOptions other = o;
  other.j_max = 8;
  CHECK_THROWS_AS(sweep(other), Error);
}

TEST_CASE("corrupted checkpoints are rejected") {
  fs::path ck = scratch("corrupt.json");
  SweepOptions o{2, 4, 2, 5, 1, ck, {}, 3};
  sweep(o);
  std::ifstream in(ck);
  std::stringstream buf;
  buf << in.rdbuf();
  in.close();
  std::string text = buf.str();
  auto pos = text.find("\"tasks\"");
  REQUIRE(pos != std::string::npos);
  auto digit = text.find_first_of("0123456789", pos);
  text[digit] = text[digit] == '9' ? '1' : static_cast<char>(text[digit] + 1);
  std::ofstream(ck) << text;
  try {
    sweep(o);
    FAIL("tampered checkpoint accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Io);
  }
  std::ofstream(ck) << "{ not json";
  CHECK_THROWS_AS(sweep(o), Error);
}

TEST_CASE("I/O failures and bad options") {
  SweepOptions o{2, 3, 2, 3, 1, fs::path("/nonexistent-dir/ck.json"), {}, {}};
  try {
    sweep(o);
    FAIL("unwritable checkpoint accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Io);
  }
  CHECK_THROWS_AS(sweep({1, 3, 2, 3, 1, {}, {}, {}}), Error);
  CHECK_THROWS_AS(sweep({2, 3, 1, 3, 1, {}, {}, {}}), Error);
  CHECK_THROWS_AS(sweep({2, 3, 2, 3, 0, {}, {}, {}}), Error);
  CHECK_THROWS_AS(sweep({4, 3, 2, 3, 1, {}, {}, {}}), Error);
}

TEST_CASE("counterexample log stays empty when every task is Lorentzian") {
  fs::path log = scratch("counterexamples.log");
  SweepReport r = sweep({2, 8, 2, 8, 2, {}, log, {}});
  CHECK(r.counterexamples.empty());
  CHECK((!fs::exists(log) || fs::file_size(log) == 0));
}

TEST_CASE("report JSON round trip") {
  SweepReport r = sweep({2, 5, 2, 6, 1, {}, {}, {}});
  r.counterexamples.push_back({{3, 4, {1, 3}}, {2, 1, 1}});
  SweepReport back = sweep_from_json(sweep_json(r));
  CHECK(back.tasks == r.tasks);
  CHECK(back.anchors == r.anchors);
  CHECK(back.counterexamples == r.counterexamples);
  CHECK(back.n_range == r.n_range);
  CHECK(back.j_range == r.j_range);
  CHECK(back.complete == r.complete);
  CHECK(sweep_json(r, false).dump() == sweep_json(back, false).dump());
  CHECK_FALSE(sweep_json(r, false).contains("seconds"));
}
