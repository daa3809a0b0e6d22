#include <catch_amalgamated.hpp>

#include <random>

#include "support/fixtures.hpp"
#include "tracehom/cenet.hpp"

using namespace tracehom;
using fixtures::marking;

namespace {
enum { a, b, c, d };
}

TEST_CASE("derived independence", "[cenet]") {
    CHECK(derive_independence(fixtures::pipeline_net()).pairs() ==
          std::vector<std::pair<EventIndex, EventIndex>>{{a, c}, {a, d}, {b, d}});

    CENet shared({"p"}, {{"x", {0}, {}}, {"y", {}, {0}}}, {});
    CHECK_FALSE(derive_independence(shared).contains(0, 1));

    CENet empty({"p"}, {{"x", {}, {}}, {"y", {}, {}}}, {});
    const auto rel = derive_independence(empty);
    CHECK(rel.contains(0, 1));
    CHECK_FALSE(rel.contains(0, 0));
}

TEST_CASE("enabling and firing", "[cenet]") {
    const auto net = fixtures::pipeline_net();
    CHECK(enabled(net, marking({0, 0, 0}), a));
    CHECK_FALSE(enabled(net, marking({1, 0, 0}), a));
    CHECK(fire(net, marking({1, 0, 0}), b) == marking({0, 1, 0}));
    CHECK(fire(net, marking({1, 0, 1}), d) == marking({1, 0, 0}));
    CHECK(fire(net, marking({0, 0, 0}), b) == std::nullopt);
    CHECK_THROWS_AS(enabled(net, marking({0, 0}), a), std::invalid_argument);

    CENet self_loop({"p", "q"}, {{"x", {0}, {0}}}, {0});
    for (unsigned bits = 0; bits < 4; ++bits)
        CHECK_FALSE(enabled(self_loop, Marking(2, bits), 0));
}

TEST_CASE("compile the pipeline", "[cenet]") {
    const auto sys = compile(fixtures::pipeline_net());
    REQUIRE(sys.state_count() == 8);
    CHECK(sys.states().front() == "(0,0,0)");
    CHECK(sys.states().back() == "(1,1,1)");
    CHECK(sys.state_name(*sys.initial()) == "(0,0,0)");
    CHECK(sys.transitions().size() == 12);
    CHECK(validate(sys).ok());

    // Arrows of the pipeline state diagram.
    const auto at = [&](const char* s) { return *sys.state_index(s); };
    CHECK(sys.apply_event(at("(0,1,1)"), a) == at("(1,1,1)"));
    CHECK(sys.apply_event(at("(0,1,1)"), d) == at("(0,1,0)"));
    CHECK(sys.apply_event(at("(0,1,0)"), c) == at("(0,0,1)"));
    CHECK(sys.apply_event(at("(1,0,1)"), b) == at("(0,1,1)"));
    CHECK(sys.apply_event(at("(1,1,0)"), c) == at("(1,0,1)"));
    CHECK(sys.apply_event(at("(1,1,1)"), d) == at("(1,1,0)"));
    CHECK(sys.apply_event(at("(1,1,1)"), a) == std::nullopt);
}

TEST_CASE("compile edge cases", "[cenet]") {
    CENet stuck({"p"}, {{"x", {0}, {}}}, {});
    CHECK(compile(stuck).state_count() == 1);

    CompileOptions all;
    all.all_markings = true;
    CHECK(compile(fixtures::pipeline_net(), all).state_count() == 8);

    CENet wide(fixtures::names("p", 21), {}, {});
    CHECK_THROWS_AS(compile(wide, all), CapExceeded);

    CompileOptions tiny;
    tiny.max_states = 3;
    CHECK_THROWS_AS(compile(fixtures::pipeline_net(), tiny), CapExceeded);

    CHECK_THROWS_AS(CENet({"p", "p"}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(CENet({"p"}, {{"x", {3}, {}}}, {}), std::out_of_range);
}

TEST_CASE("compiled nets are always sound", "[cenet][property]") {
    std::mt19937 rng(23);
    int compiled = 0;
    for (int round = 0; round < 200; ++round) {
        auto sys = fixtures::random_net_system(rng, 5, 64, false);
        if (!sys)
            continue;
        ++compiled;
        REQUIRE(validate(*sys).ok());
        const auto rel = sys->independence();
        for (EventIndex x = 0; x < sys->event_count(); ++x) {
            REQUIRE_FALSE(rel.contains(x, x));
            for (EventIndex y = 0; y < sys->event_count(); ++y)
                REQUIRE(rel.contains(x, y) == rel.contains(y, x));
        }
        REQUIRE(reachable_states(*sys, *sys->initial()).size() == sys->state_count());
        const auto cplx = build_bases(*sys, all_states(*sys), 1);
        REQUIRE(cplx.size(1) == sys->transitions().size());
    }
    CHECK(compiled > 100);
}
