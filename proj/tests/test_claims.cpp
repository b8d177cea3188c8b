#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "monoidlab/claims.hpp"

namespace claims = monoidlab::claims;

namespace {
  struct Run {
    int         code = -1;
    std::string out;
  };

  Run run(std::string const& args) {
    std::string const cmd = std::string(MONOIDLAB_CLI) + " " + args + " 2>&1";
    Run               r;
    FILE*             pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
      return r;
    }
    std::array<char, 4096> buf{};
    std::size_t            got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      r.out.append(buf.data(), got);
    }
    int const status = pclose(pipe);
    r.code           = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  std::string data(char const* name) {
    return std::string(MONOIDLAB_TEST_DATA) + "/" + name;
  }
}  // namespace

TEST(Claims, RegistryIsComplete) {
  auto const reg = claims::registry();
  ASSERT_EQ(reg.size(), 9u);
  for (auto const& c : reg) {
    EXPECT_FALSE(c.statement.empty()) << c.id;
  }
  EXPECT_THROW((void) claims::verify("no-such-claim", {}), std::invalid_argument);
}

TEST(Claims, FastClaimsVerify) {
  for (char const* id : {"fig1-pentagon", "fig2-modularity", "basis-derives", "step1-closure",
                         "theorem-ii-holds"}) {
    auto const r = claims::verify(id, {});
    EXPECT_EQ(r.status, claims::Status::verified) << id << "\n" << r.evidence.dump();
    EXPECT_EQ(r.id, id);
  }
}

TEST(Claims, Step2Readings) {
  claims::ClaimParams p;
  p.perm = "1 2";
  EXPECT_EQ(claims::verify("step2-satisfaction", p).status, claims::Status::verified);
  p.reading = "as-printed";
  auto const r = claims::verify("step2-satisfaction", p);
  EXPECT_EQ(r.status, claims::Status::refuted);
  p.perm = "2 1";
  EXPECT_EQ(claims::verify("step2-satisfaction", p).status, claims::Status::verified);
  p.reading = "sideways";
  EXPECT_THROW((void) claims::verify("step2-satisfaction", p), std::invalid_argument);
}

TEST(Claims, TinyBudgetIsUnknown) {
  claims::ClaimParams p;
  p.n      = 2;
  p.budget = 10;
  EXPECT_EQ(claims::verify("chain-isoterms", p).status, claims::Status::unknown);
  claims::ClaimParams q;
  q.target    = "x y = y x";
  q.max_steps = 50;
  EXPECT_EQ(claims::verify("basis-derives", q).status, claims::Status::unknown);
}

TEST(Claims, EmitOmitsTimeUnlessAsked) {
  auto r    = claims::verify("fig1-pentagon", {});
  r.seconds = 1.5;
  auto const plain = claims::emit(r, claims::Format::json);
  EXPECT_EQ(plain.find("seconds"), std::string::npos);
  EXPECT_NE(claims::emit(r, claims::Format::json, true).find("seconds"), std::string::npos);
  auto const doc = nlohmann::ordered_json::parse(plain);
  EXPECT_EQ(doc["verdict"], "verified");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("claim fig2-modularity").code, 0);
  EXPECT_EQ(run("claim step2-satisfaction --perm \"1 2\" --reading as-printed").code, 1);
  EXPECT_EQ(run("--budget 10 claim chain-isoterms --n 2").code, 2);
  EXPECT_EQ(run("claim no-such-claim").code, 3);
  EXPECT_EQ(run("").code, 3);
  EXPECT_EQ(run("word \"X\"").code, 3);
  EXPECT_EQ(run("rees check " + data("missing.txt") + " " + data("ids.txt")).code, 3);
}

TEST(Cli, FileCommands) {
  auto const d = run("ident deduce " + data("sigma.txt") + " \"x y z x t y = y x z x t y\"");
  EXPECT_EQ(d.code, 0) << d.out;
  EXPECT_NE(d.out.find("derived in 2 steps"), std::string::npos) << d.out;

  auto const c = run("rees check " + data("mxy.txt") + " " + data("ids.txt"));
  EXPECT_EQ(c.code, 1) << c.out;
  EXPECT_NE(c.out.find("holds\tx x = x x x"), std::string::npos) << c.out;

  auto const l = run("lattice check " + data("pentagon.txt") + " --element c");
  EXPECT_EQ(l.code, 1) << l.out;
  EXPECT_EQ(run("lattice check " + data("pentagon.txt") + " --element a").code, 0);
}

TEST(Cli, JsonIsByteStable) {
  for (char const* args :
       {"--json claim fig2-modularity", "--json claim step1-closure",
        "--json fmon isoterm MXY \"x y x\"", "--json ident check SIGMA \"x x y = y x x\""}) {
    std::string a = args;
    for (auto [key, file] : {std::pair{"MXY", "mxy.txt"}, std::pair{"SIGMA", "sigma.txt"}}) {
      if (auto pos = a.find(key); pos != std::string::npos) {
        a.replace(pos, std::string(key).size(), data(file));
      }
    }
    auto const first  = run(a);
    auto const second = run(a);
    EXPECT_EQ(first.out, second.out) << a;
    EXPECT_TRUE(nlohmann::ordered_json::accept(first.out)) << first.out;
  }
}

TEST(Cli, TimingFlagAddsSeconds) {
  auto const r = run("--json --timing claim fig1-pentagon");
  EXPECT_NE(r.out.find("\"seconds\""), std::string::npos) << r.out;
}
