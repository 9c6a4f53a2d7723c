#include <doctest.h>

#include <filesystem>

#include "ssi/simulate.hpp"
#include "support/model_gen.hpp"
#include "support/proc.hpp"

using namespace ssi;
using tests::run_command;

namespace {

const std::string kCli = SSI_CLI_PATH;
const std::filesystem::path kModels = SSI_MODELS_DIR;

std::string coin() {
    return (kModels / "coin.ssi").string();
}

std::string helldivers() {
    return (kModels / "helldivers.ssi").string();
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_SUITE("cli validate and reach") {
    TEST_CASE("a valid model prints OK and exits 0") {
        const auto result = run_command(kCli + " validate " + coin());
        CHECK(result.exit_code == 0);
        CHECK(result.out == "OK: closure and reachability hold\n");
        CHECK(result.err.empty());
    }

    TEST_CASE("an invalid model prints its report and exits 1") {
        // strip the Toss rows out of the bundled coin document
        std::string text = io::read_file(coin());
        std::string filtered;
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.find("Toss ->") == std::string::npos) filtered += line + "\n";
        }
        const auto path = temp_file("cli-tossless.ssi");
        io::write_file_atomic(path, filtered);
        const auto result = run_command(kCli + " validate " + path.string());
        CHECK(result.exit_code == 1);
        CHECK(result.out ==
              "unreachable: Head\n"
              "unreachable: Rolling\n"
              "unreachable: Standing\n");
        std::filesystem::remove(path);
    }

    TEST_CASE("unreadable or malformed input exits 2") {
        CHECK(run_command(kCli + " validate /no/such/file.ssi").exit_code == 2);
        const auto path = temp_file("cli-garbage.ssi");
        io::write_file_atomic(path, "this is not a model\n");
        const auto result = run_command(kCli + " validate " + path.string());
        CHECK(result.exit_code == 2);
        CHECK(result.err.find("error:") != std::string::npos);
        std::filesystem::remove(path);
    }

    TEST_CASE("reach lists both sets with the contract exit code") {
        const auto ok = run_command(kCli + " reach " + coin());
        CHECK(ok.exit_code == 0);
        CHECK(ok.out ==
              "reachable (4): Head Rolling Standing Tail\n"
              "unreachable (0):\n");

        const auto path = temp_file("cli-reach-frag.ssi");
        io::write_file_atomic(path,
                              "[states]\nA\nB\nC\n[operations]\ngo player 1\n"
                              "[transitions]\nA go -> B:1\n[initial]\nA\n");
        const auto fragmented = run_command(kCli + " reach " + path.string());
        CHECK(fragmented.exit_code == 1);
        CHECK(fragmented.out ==
              "reachable (2): A B\n"
              "unreachable (1): C\n");
        std::filesystem::remove(path);
    }

    TEST_CASE("the scale guard honours SSI_MAX_EDGES") {
        const auto result = run_command("SSI_MAX_EDGES=1 " + kCli + " validate " + coin());
        CHECK(result.exit_code == 2);
        CHECK(result.err.find("exceeding") != std::string::npos);
        CHECK(run_command("SSI_MAX_EDGES=bogus " + kCli + " validate " + coin()).exit_code == 2);
    }
}

TEST_SUITE("cli simulate") {
    TEST_CASE("scripted run prints the pinned trace and is byte-stable") {
        const std::string cmd =
            kCli + " simulate " + coin() + " --script Toss,Drop --seed 7";
        const auto first = run_command(cmd);
        REQUIRE(first.exit_code == 0);
        const std::string expected =
            "[header]\n"
            "kind simulate\n"
            "model " + io::model_hash(tests::coin_model()) + "\n"
            "seed 7\n"
            "policy scripted Toss Drop\n"
            "start-policy uniform-initial\n"
            "start Tail\n"
            "max-steps 100\n"
            "stop final-state\n"
            "\n"
            "[steps]\n"
            "0 Toss Rolling 1 -\n"
            "1 Drop Head 49/100 0x1.8f2f879164c82p-2\n";
        CHECK(first.out == expected);
        CHECK(run_command(cmd).out == first.out);
    }

    TEST_CASE("random runs with equal seeds are byte-identical") {
        const std::string cmd = kCli + " simulate " + coin() + " --random --seed 7";
        const auto a = run_command(cmd);
        const auto b = run_command(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }

    TEST_CASE("traces written to disk parse and replay") {
        const auto path = temp_file("cli-run.trace");
        const auto result = run_command(kCli + " simulate " + coin() +
                                        " --random --seed 12 --trace " + path.string());
        REQUIRE(result.exit_code == 0);
        CHECK(result.out.empty());
        CHECK(result.err.find("wrote") != std::string::npos);
        const io::TraceDocument doc = io::parse_trace(io::read_file(path));
        const StateSpace space = tests::expect_space(tests::coin_model());
        CHECK(io::replay_trace(space, doc).ok);
        std::filesystem::remove(path);
    }

    TEST_CASE("inapplicable scripts exit 2 with a diagnostic") {
        const auto result = run_command(kCli + " simulate " + coin() + " --script Drop --seed 1");
        CHECK(result.exit_code == 2);
        CHECK(result.err.find("not applicable") != std::string::npos);
    }

    TEST_CASE("interactive sessions work through stdin") {
        const auto done = run_command(kCli + " simulate " + coin() + " --interactive --seed 7",
                                      "Toss\nDrop\n");
        CHECK(done.exit_code == 0);
        CHECK(done.out.find("stop final-state") != std::string::npos);
        const auto aborted =
            run_command(kCli + " simulate " + coin() + " --interactive --seed 7", "");
        CHECK(aborted.exit_code == 2);
    }
}

TEST_SUITE("cli speedrun") {
    TEST_CASE("coin tail to head") {
        const auto result = run_command(kCli + " speedrun " + coin() + " --to Head");
        CHECK(result.exit_code == 0);
        CHECK(result.out ==
              "cost: 2\n"
              "ops: Toss Drop\n"
              "path: Tail -Toss-> Rolling -Drop-> Head\n");
    }

    TEST_CASE("avoiding the cut vertex exits 4") {
        const auto result =
            run_command(kCli + " speedrun " + coin() + " --to Head --avoid Rolling");
        CHECK(result.exit_code == 4);
        CHECK(result.err.find("no path") != std::string::npos);
    }

    TEST_CASE("a target inside the initial set is free") {
        const auto result = run_command(kCli + " speedrun " + coin() + " --to Tail");
        CHECK(result.exit_code == 0);
        CHECK(result.out.find("cost: 0") == 0);
    }

    TEST_CASE("--from overrides the initial set") {
        const auto result =
            run_command(kCli + " speedrun " + coin() + " --from Rolling --to Standing");
        CHECK(result.exit_code == 0);
        CHECK(result.out ==
              "cost: 1\n"
              "ops: Drop\n"
              "path: Rolling -Drop-> Standing\n");
    }

    TEST_CASE("labels resolve as targets") {
        const auto result =
            run_command(kCli + " speedrun " + helldivers() + " --to warrior-dead");
        CHECK(result.exit_code == 0);
        // the rifle kill from engaged is a possibilistic edge, so two steps
        CHECK(result.out ==
              "cost: 2\n"
              "ops: advance fire-rifle\n"
              "path: patrol -advance-> engaged -fire-rifle-> bug-dead\n");
    }
}

TEST_SUITE("cli achieve") {
    TEST_CASE("the bundled achievement verifies against a conforming run") {
        const auto trace = temp_file("cli-eat-this.trace");
        const std::string script = "advance,fire-rifle,advance,bug-attack,fire-shotgun";
        const auto sim =
            run_command(kCli + " simulate " + helldivers() + " --script " + script +
                        " --seed 0 --trace " + trace.string());
        REQUIRE(sim.exit_code == 0);  // seed 0 gives miss, survive, kill
        const auto result =
            run_command(kCli + " achieve " + helldivers() + " --trace " + trace.string() +
                        " --spec " + (kModels / "eat-this.spec").string());
        CHECK(result.exit_code == 0);
        CHECK(result.out ==
              "achieved: yes\n"
              "witness: steps 4..5: close-range -fire-shotgun-> bug-dead\n");
        std::filesystem::remove(trace);
    }

    TEST_CASE("non-conforming runs exit 1") {
        const auto trace = temp_file("cli-rifle-only.trace");
        const auto sim = run_command(kCli + " simulate " + helldivers() +
                                     " --script advance,advance --seed 1 --trace " +
                                     trace.string());
        REQUIRE(sim.exit_code == 0);
        const auto result =
            run_command(kCli + " achieve " + helldivers() + " --trace " + trace.string() +
                        " --spec " + (kModels / "eat-this.spec").string());
        CHECK(result.exit_code == 1);
        CHECK(result.out == "achieved: no\n");
        std::filesystem::remove(trace);
    }

    TEST_CASE("traces from the wrong model exit 2") {
        const auto trace = temp_file("cli-coin.trace");
        run_command(kCli + " simulate " + coin() + " --script Toss --seed 1 --trace " +
                    trace.string());
        const auto result =
            run_command(kCli + " achieve " + helldivers() + " --trace " + trace.string() +
                        " --spec " + (kModels / "eat-this.spec").string());
        CHECK(result.exit_code == 2);
        CHECK(result.err.find("recorded against") != std::string::npos);
        std::filesystem::remove(trace);
    }
}

TEST_SUITE("cli qct") {
    TEST_CASE("frequencies are printed and deterministic") {
        const std::string cmd = kCli + " qct --trials 10000 --seed 42";
        const auto result = run_command(cmd);
        CHECK(result.exit_code == 0);
        CHECK(result.out ==
              "trials: 10000\n"
              "seed: 42\n"
              "Head: 4978 (0.497800)\n"
              "Tail: 5022 (0.502200)\n");
        CHECK(run_command(cmd).out == result.out);
    }

    TEST_CASE("the correspondence table prints on request") {
        const auto result = run_command(kCli + " qct --trials 1 --seed 1 --table");
        CHECK(result.exit_code == 0);
        CHECK(result.out.find("Initial State") != std::string::npos);
        CHECK(result.out.find("|0>") != std::string::npos);
        CHECK(result.out.find("Rolling") != std::string::npos);
        CHECK(result.out.find("Classical Coin Toss") != std::string::npos);
    }

    TEST_CASE("trial records can be saved") {
        const auto path = temp_file("cli-qct.trace");
        const auto result =
            run_command(kCli + " qct --trials 25 --seed 5 --trace " + path.string());
        CHECK(result.exit_code == 0);
        const io::QctDocument doc = io::parse_qct_document(io::read_file(path));
        CHECK(doc.trials == 25);
        CHECK(doc.rows.size() == 25);
        std::filesystem::remove(path);
    }

    TEST_CASE("zero trials exit 2") {
        CHECK(run_command(kCli + " qct --trials 0 --seed 1").exit_code == 2);
    }
}

TEST_SUITE("cli misc") {
    TEST_CASE("missing subcommands and unknown flags exit 2") {
        CHECK(run_command(kCli).exit_code == 2);
        CHECK(run_command(kCli + " frobnicate").exit_code == 2);
        CHECK(run_command(kCli + " validate").exit_code == 2);
    }

    TEST_CASE("simulate requires exactly one mode") {
        CHECK(run_command(kCli + " simulate " + coin()).exit_code == 2);
        CHECK(run_command(kCli + " simulate " + coin() + " --script Toss --random").exit_code ==
              2);
    }

    TEST_CASE("help exits 0") {
        CHECK(run_command(kCli + " --help").exit_code == 0);
    }
}
