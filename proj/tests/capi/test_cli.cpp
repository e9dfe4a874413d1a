// Copyright 2026 The EAI Toolkit Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tests for the eai command-line tool. Every case shells out to
// the real binary (EAI_CLI_PATH) and checks output bytes, streams, and the
// exit contract: 0 success, 1 validation failure, 2 I/O failure.

#include <sys/wait.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "support.hpp"

namespace {

using eai::test::data_dir;
using eai::test::read_file;
using eai::test::tag_hex;
using eai::test::TempDir;

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

const std::filesystem::path& scratch() {
    static TempDir dir;
    return dir.path();
}

// Runs `eai <args>` through the shell, capturing both streams.
CliResult run_cli(const std::string& args, const std::string& env_prefix = std::string()) {
    static int seq = 0;
    std::string err_path = (scratch() / ("stderr." + std::to_string(seq++))).string();
    std::string cmd = env_prefix + EAI_CLI_PATH " " + args + " 2>" + err_path;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed");
    CliResult r;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int raw = pclose(pipe);
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.err = read_file(err_path);
    return r;
}

std::string data(const std::string& name) { return (data_dir() / name).string(); }

std::string expected(const std::string& name) {
    return read_file(data_dir() / "expected" / name);
}

// Graph caches shared across cases; built once via the CLI itself.
const std::string& analytics_graph() {
    static const std::string path = [] {
        std::string p = (scratch() / "analytics.graph").string();
        CliResult r =
            run_cli("graph build --transfers " + data("analytics_fixture.csv") + " --out " + p);
        if (r.code != 0) throw std::runtime_error("analytics graph build failed: " + r.err);
        return p;
    }();
    return path;
}

const std::string& proximity_graph() {
    static const std::string path = [] {
        std::string p = (scratch() / "proximity.graph").string();
        CliResult r =
            run_cli("graph build --transfers " + data("proximity_fixture.csv") + " --out " + p);
        if (r.code != 0) throw std::runtime_error("proximity graph build failed: " + r.err);
        return p;
    }();
    return path;
}

// --graph/--exchanges prefix for the analytics fixture pipeline.
std::string analytics_pipeline() {
    return "--graph " + analytics_graph() + " --exchanges " + data("analytics_exchanges.txt");
}

std::string analytics_reports() {
    return analytics_pipeline() + " --transfers " + data("analytics_fixture.csv");
}

constexpr char kRootOfFive[] =
    "0x993d93e6de751b6d1a8f638cfc5960d61babe8c53b137c15cd46a8c834b78513";

TEST_CASE("cli: version, help, and usage errors") {
    CliResult version = run_cli("--version");
    CHECK(version.code == 0);
    CHECK(version.out.find('.') != std::string::npos);

    CliResult help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("graph") != std::string::npos);
    CHECK(help.out.find("merkle") != std::string::npos);

    CliResult bare = run_cli("");
    CHECK(bare.code == 1);
    CHECK(bare.err.find("error:") != std::string::npos);

    CHECK(run_cli("frobnicate").code == 1);
    CHECK(run_cli("graph").code == 1); // subcommand required
}

TEST_CASE("cli: graph build writes a cache and prints stats") {
    TempDir tmp;
    std::string cache = tmp.file("g.bin");
    CliResult build =
        run_cli("graph build --transfers " + data("graph_fixture.csv") + " --out " + cache);
    CHECK(build.code == 0);
    CHECK(build.out == expected("graph_stats.txt"));
    CHECK(std::filesystem::exists(cache));

    CliResult stats = run_cli("graph stats --graph " + cache);
    CHECK(stats.code == 0);
    CHECK(stats.out == expected("graph_stats.txt"));

    std::string out_file = tmp.file("stats.txt");
    CliResult to_file = run_cli("graph stats --graph " + cache + " --out " + out_file);
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    CHECK(read_file(out_file) == expected("graph_stats.txt"));
}

TEST_CASE("cli: graph command validation and I/O failures") {
    TempDir tmp;
    CliResult no_out = run_cli("graph build --transfers " + data("graph_fixture.csv"));
    CHECK(no_out.code == 1);
    CHECK(no_out.err.find("requires --out") != std::string::npos);

    CliResult missing = run_cli("graph build --transfers " + tmp.file("nope.csv") + " --out " +
                                tmp.file("g.bin"));
    CHECK(missing.code == 2);
    CHECK(missing.err.find("error:") != std::string::npos);

    CHECK(run_cli("graph stats --graph " + tmp.file("absent.bin")).code == 2);

    std::string junk = tmp.write("junk.bin", "not a graph cache");
    CHECK(run_cli("graph stats --graph " + junk).code == 1);
}

TEST_CASE("cli: graph build lenient mode and threshold filter") {
    TempDir tmp;
    std::string mixed = tmp.write("mixed.csv", "ordering_key,from,to,amount_usd,token,direct\n"
                                               "1," + tag_hex(0x01) + "," + tag_hex(0x02) +
                                               ",50,USDT,1\n"
                                               "2,zzz," + tag_hex(0x03) + ",20,USDT,1\n"
                                               "3," + tag_hex(0x02) + "," + tag_hex(0x03) +
                                               ",30,USDT,1\n");

    CliResult strict = run_cli("graph build --transfers " + mixed + " --out " + tmp.file("a"));
    CHECK(strict.code == 1);
    CHECK(strict.err.find("line 3") != std::string::npos);

    CliResult lenient =
        run_cli("graph build --lenient --transfers " + mixed + " --out " + tmp.file("b"));
    CHECK(lenient.code == 0);
    CHECK(lenient.err.find("warning:") != std::string::npos);
    CHECK(lenient.err.find(":3:") != std::string::npos);
    CHECK(lenient.out == "nodes 3\nedges 2\nvolume_usd 80.000000\n");

    // Ids are interned before thresholding, so dropping an edge keeps nodes.
    CliResult high = run_cli("graph build --lenient --threshold 40 --transfers " + mixed +
                             " --out " + tmp.file("c"));
    CHECK(high.code == 0);
    CHECK(high.out == "nodes 3\nedges 1\nvolume_usd 50.000000\n");

    std::string wide = tmp.file("wide.bin");
    CliResult id8 = run_cli("graph build --lenient --id-width 8 --transfers " + mixed +
                            " --out " + wide);
    CHECK(id8.code == 0);
    CliResult wide_stats = run_cli("graph stats --graph " + wide);
    CHECK(wide_stats.code == 0);
    CHECK(wide_stats.out == "nodes 3\nedges 2\nvolume_usd 80.000000\n");
}

TEST_CASE("cli: distances match committed output") {
    std::string args =
        "distances --graph " + proximity_graph() + " --exchanges " + data("proximity_exchanges.txt");
    CliResult direct = run_cli(args);
    CHECK(direct.code == 0);
    CHECK(direct.out == expected("proximity_distances.csv"));

    TempDir tmp;
    std::string out_file = tmp.file("d.csv");
    CliResult to_file = run_cli(args + " --out " + out_file);
    CHECK(to_file.code == 0);
    CHECK(read_file(out_file) == expected("proximity_distances.csv"));

    CliResult threaded = run_cli(args + " --threads 3");
    CHECK(threaded.code == 0);
    CHECK(threaded.out == direct.out);

    CliResult analytics = run_cli("distances " + analytics_pipeline());
    CHECK(analytics.code == 0);
    CHECK(analytics.out == expected("analytics_distances.csv"));
}

TEST_CASE("cli: distance pipeline error paths") {
    // Excluding every exchange empties the source set.
    CliResult no_sources =
        run_cli("distances --graph " + proximity_graph() + " --exchanges " +
                data("proximity_exchanges.txt") + " --exclusions " +
                data("proximity_exchanges.txt"));
    CHECK(no_sources.code == 1);
    CHECK(no_sources.err.find("error:") != std::string::npos);

    CliResult zero_hops = run_cli("distances --graph " + proximity_graph() + " --exchanges " +
                                  data("proximity_exchanges.txt") + " --max-hops 0");
    CHECK(zero_hops.code == 1);

    CliResult missing_flag = run_cli("distances --graph " + proximity_graph());
    CHECK(missing_flag.code == 1);
    CHECK(missing_flag.err.find("--exchanges") != std::string::npos);
}

TEST_CASE("cli: wallet report CSV matches committed bytes") {
    CliResult csv = run_cli("report wallets " + analytics_reports() + " --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out == expected("wallet_table.csv"));

    CliResult text = run_cli("report wallets " + analytics_reports() + " --format text");
    CHECK(text.code == 0);
    CHECK(text.out.find("10-1k") != std::string::npos);
    CHECK(text.out.find("5+") != std::string::npos);

    // Custom bucket edges reshape the rows; descending edges are rejected.
    CliResult wide = run_cli("report wallets " + analytics_reports() +
                             " --buckets 10,500 --format csv");
    CHECK(wide.code == 0);
    CHECK(wide.out.find("500+") != std::string::npos);
    CHECK(run_cli("report wallets " + analytics_reports() + " --buckets 500,10").code == 1);
}

TEST_CASE("cli: txn report CSV matches committed bytes") {
    CliResult counts = run_cli("report txns " + analytics_reports() + " --format csv");
    CHECK(counts.code == 0);
    CHECK(counts.out == expected("txn_table.csv"));

    CliResult volume = run_cli("report txns " + analytics_reports() + " --volume --format csv");
    CHECK(volume.code == 0);
    CHECK(volume.out == expected("txn_volume_table.csv"));
}

TEST_CASE("cli: exploiter report matches committed bytes") {
    std::string args = "report exploiters " + analytics_pipeline() + " --exploiters " +
                       data("exploiters.txt");
    CliResult csv = run_cli(args + " --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out == expected("exploiters.csv"));

    CliResult text = run_cli(args + " --format text");
    CHECK(text.code == 0);
    CHECK(text.out.find("non-EAI 71.4%") != std::string::npos);
    CHECK(text.out.find("beyond 57.1%") != std::string::npos);
}

TEST_CASE("cli: stats CSV matches committed bytes") {
    std::string args = "stats " + analytics_reports() + " --wallet-threshold 10 --min-txn 10";
    CliResult csv = run_cli(args + " --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out == expected("summary.csv"));

    CliResult text = run_cli(args + " --format text");
    CHECK(text.code == 0);
    CHECK(text.out.find("wallets above threshold: 31") != std::string::npos);
}

TEST_CASE("cli: JSON reports carry provenance and are deterministic") {
    CliResult first = run_cli("report wallets " + analytics_reports());
    CHECK(first.code == 0);
    nlohmann::json j = nlohmann::json::parse(first.out);
    CHECK(j["report"] == "wallet_distance");
    CHECK(j["parameters"]["max_hops"] == 5);
    CHECK(j["rows"].size() == 4);
    CHECK(j["total"].is_number());
    CHECK(j["input_digests"].size() == 3); // graph cache, exchanges, transfers
    for (const auto& [path, digest] : j["input_digests"].items()) {
        CHECK(std::filesystem::exists(path));
        std::string hex = digest.get<std::string>();
        CHECK(hex.size() == 66);
        CHECK(hex.substr(0, 2) == "0x");
    }

    CliResult second = run_cli("report wallets " + analytics_reports());
    nlohmann::json k = nlohmann::json::parse(second.out);
    j.erase("generated_at");
    k.erase("generated_at");
    CHECK(j.dump() == k.dump());

    CliResult exploiters = run_cli("report exploiters " + analytics_pipeline() +
                                   " --exploiters " + data("exploiters.txt"));
    CHECK(exploiters.code == 0);
    nlohmann::json e = nlohmann::json::parse(exploiters.out);
    CHECK(e["report"] == "exploiters");
    CHECK(e["found"] == 6);
    CHECK(e["pct_non_eai"] == "71.4");

    CliResult summary = run_cli("stats " + analytics_reports() +
                                " --wallet-threshold 10 --min-txn 10");
    CHECK(summary.code == 0);
    nlohmann::json s = nlohmann::json::parse(summary.out);
    CHECK(s["report"] == "summary_stats");
    CHECK(s["wallet_population"] == 31);
    CHECK(s["pct_txn_eai"] == "46.2");
    CHECK(s["parameters"]["wallet_threshold_usd"] == "10");

    CliResult bogus = run_cli("report wallets " + analytics_reports() + " --format sideways");
    CHECK(bogus.code == 1);
    CHECK(bogus.err.find("unknown output format") != std::string::npos);
}

TEST_CASE("cli: config file fills unset flags and command line wins") {
    TempDir tmp;
    std::string cfg = tmp.write(
        "stats.json", R"({"wallet_threshold": "10", "min_txn": "10", "format": "csv"})");
    CliResult from_config = run_cli("stats " + analytics_reports() + " --config " + cfg);
    CHECK(from_config.code == 0);
    CHECK(from_config.out == expected("summary.csv"));

    CliResult overridden =
        run_cli("stats " + analytics_reports() + " --config " + cfg + " --format text");
    CHECK(overridden.code == 0);
    CHECK(overridden.out.find("wallets above threshold: 31") != std::string::npos);

    // --max-hops routed through the config: the chain truncates after one hop.
    std::string hops = tmp.write("hops.json", R"({"max_hops": 1})");
    CliResult capped = run_cli("distances --graph " + proximity_graph() + " --exchanges " +
                               data("proximity_exchanges.txt") + " --config " + hops);
    CHECK(capped.code == 0);
    CHECK(capped.out.find(tag_hex(0x41) + ",1\n") != std::string::npos);
    CHECK(capped.out.find(tag_hex(0x42) + ",1+\n") != std::string::npos);
    CHECK(capped.out.find(",2\n") == std::string::npos);

    CliResult flag_wins = run_cli("distances --graph " + proximity_graph() + " --exchanges " +
                                  data("proximity_exchanges.txt") + " --config " + hops +
                                  " --max-hops 5");
    CHECK(flag_wins.code == 0);
    CHECK(flag_wins.out == expected("proximity_distances.csv"));

    std::string not_object = tmp.write("list.json", "[]");
    CliResult bad_shape = run_cli("gas table --config " + not_object);
    CHECK(bad_shape.code == 1);
    CHECK(bad_shape.err.find("expected a JSON object") != std::string::npos);

    CliResult no_file = run_cli("gas table --config " + tmp.file("absent.json"));
    CHECK(no_file.code == 2);
    CHECK(no_file.err.find("cannot open config") != std::string::npos);

    std::string mistyped = tmp.write("typed.json", R"({"max_hops": "five"})");
    CliResult wrong_type = run_cli("distances --graph " + proximity_graph() + " --exchanges " +
                                   data("proximity_exchanges.txt") + " --config " + mistyped);
    CHECK(wrong_type.code == 1);
    CHECK(wrong_type.err.find("wrong type") != std::string::npos);
}

TEST_CASE("cli: merkle build, prove, and verify round trip") {
    TempDir tmp;
    std::string addresses = tmp.write("members.txt", "# registry members\n" + tag_hex(5) + "\n" +
                                                         tag_hex(3) + "\n" + tag_hex(1) + "\n" +
                                                         tag_hex(4) + "\n" + tag_hex(2) + "\n" +
                                                         tag_hex(3) + "\n");
    std::string registry = tmp.file("registry.txt");
    CliResult build = run_cli("merkle build --addresses " + addresses + " --out " + registry);
    CHECK(build.code == 0);
    CHECK(build.out == std::string("root ") + kRootOfFive + "\nleaves 5\ndepth 3\n");
    CHECK(read_file(registry) == tag_hex(1) + "\n" + tag_hex(2) + "\n" + tag_hex(3) + "\n" +
                                     tag_hex(4) + "\n" + tag_hex(5) + "\n");
    CHECK(read_file(registry + ".root") == std::string(kRootOfFive) + "\n");

    std::string proof = tmp.file("proof.json");
    CliResult prove = run_cli("merkle prove --addresses " + addresses + " --address " +
                              tag_hex(3) + " --out " + proof);
    CHECK(prove.code == 0);
    CHECK(nlohmann::json::parse(read_file(proof))["address"] == tag_hex(3));

    CliResult embedded = run_cli("merkle verify --proof " + proof);
    CHECK(embedded.code == 0);
    CHECK(embedded.out == "valid\n");

    CHECK(run_cli("merkle verify --proof " + proof + " --root " + kRootOfFive).code == 0);
    CHECK(run_cli("merkle verify --proof " + proof + " --root-file " + registry + ".root").code ==
          0);

    // A root from some other registry must not bind.
    CliResult foreign = run_cli(
        "merkle verify --proof " + proof +
        " --root 0x261c46b3b23ad0a970eb42ecee2fba8b548ff13e1e4ac9ecc2132b33c85c3558");
    CHECK(foreign.code == 1);
    CHECK(foreign.out == "invalid\n");

    CliResult exclusive = run_cli("merkle verify --proof " + proof + " --root " + kRootOfFive +
                                  " --root-file " + registry + ".root");
    CHECK(exclusive.code == 1);
    CHECK(exclusive.err.find("exclusive") != std::string::npos);

    std::string tampered_json = read_file(proof);
    tampered_json.replace(tampered_json.find(tag_hex(3)), tag_hex(3).size(), tag_hex(7));
    std::string tampered = tmp.write("tampered.json", tampered_json);
    CliResult forged = run_cli("merkle verify --proof " + tampered);
    CHECK(forged.code == 1);
    CHECK(forged.out == "invalid\n");

    std::string garbage = tmp.write("garbage.json", "{]");
    CHECK(run_cli("merkle verify --proof " + garbage).code == 1);

    CliResult non_member = run_cli("merkle prove --addresses " + addresses + " --address " +
                                   tag_hex(9) + " --out " + tmp.file("p9.json"));
    CHECK(non_member.code == 1);
    CHECK(non_member.err.find("error:") != std::string::npos);

    CHECK(run_cli("merkle build --addresses " + addresses).code == 1); // --out required
}

TEST_CASE("cli: attest keygen, sign, and verify round trip") {
    TempDir tmp;
    std::string key = tmp.file("signer.key");
    CliResult keygen = run_cli("attest keygen --out " + key);
    CHECK(keygen.code == 0);
    CHECK(keygen.out.find("public_key 0x") != std::string::npos);
    CHECK(keygen.out.find("fingerprint 0x") != std::string::npos);
    CHECK(std::filesystem::exists(key));
    std::string pubkey = keygen.out.substr(keygen.out.find("public_key ") + 11, 66);

    std::string attestation = tmp.file("att.json");
    std::string sign_args = "attest sign --address " + tag_hex(0xaa) +
                            " --ttl 3600 --now 1000000 --nonce 0xdeadbeef --out " + attestation;
    CliResult signed_ok = run_cli(sign_args + " --key " + key);
    CHECK(signed_ok.code == 0);
    nlohmann::json att = nlohmann::json::parse(read_file(attestation));
    CHECK(att["scheme"] == "ed25519");
    CHECK(att["address"] == tag_hex(0xaa));
    CHECK(att["is_eai"] == true);
    CHECK(att["expires_at"] == 1003600);
    CHECK(att["nonce"] == "0x00000000deadbeef");

    CliResult valid =
        run_cli("attest verify --attestation " + attestation + " --key " + key + " --now 1000001");
    CHECK(valid.code == 0);
    CHECK(valid.out == "valid\n");
    CHECK(run_cli("attest verify --attestation " + attestation + " --pubkey " + pubkey +
                  " --now 1000001")
              .code == 0);

    CliResult expired =
        run_cli("attest verify --attestation " + attestation + " --key " + key + " --now 1003600");
    CHECK(expired.code == 1);
    CHECK(expired.out == "expired\n");

    std::string other_key = tmp.file("other.key");
    CHECK(run_cli("attest keygen --out " + other_key).code == 0);
    CliResult forged = run_cli("attest verify --attestation " + attestation + " --key " +
                               other_key + " --now 1000001");
    CHECK(forged.code == 1);
    CHECK(forged.out == "bad_signature\n");

    // The signing key can come from the environment instead of --key.
    std::string env_att = tmp.file("env_att.json");
    CliResult via_env = run_cli("attest sign --address " + tag_hex(0xaa) +
                                    " --ttl 60 --now 1000000 --out " + env_att,
                                "EAI_SIGNER_KEY_PATH=" + key + " ");
    CHECK(via_env.code == 0);
    CHECK(run_cli("attest verify --attestation " + env_att + " --now 1000010",
                  "EAI_SIGNER_KEY_PATH=" + key + " ")
              .code == 0);

    CliResult keyless = run_cli(sign_args, "EAI_SIGNER_KEY_PATH= ");
    CHECK(keyless.code == 1);
    CHECK(keyless.err.find("no signing key") != std::string::npos);

    CliResult bad_nonce = run_cli("attest sign --key " + key + " --address " + tag_hex(0xaa) +
                                  " --nonce zzz --out " + tmp.file("x.json"));
    CHECK(bad_nonce.code == 1);
    CHECK(bad_nonce.err.find("bad --nonce") != std::string::npos);

    CliResult zero_ttl = run_cli("attest sign --key " + key + " --address " + tag_hex(0xaa) +
                                 " --ttl 0 --out " + tmp.file("y.json"));
    CHECK(zero_ttl.code == 1);

    std::string negative = tmp.file("neg.json");
    CliResult not_eai = run_cli("attest sign --key " + key + " --address " + tag_hex(0xbb) +
                                " --is-eai false --ttl 60 --now 1000000 --out " + negative);
    CHECK(not_eai.code == 0);
    CHECK(nlohmann::json::parse(read_file(negative))["is_eai"] == false);
}

TEST_CASE("cli: ledger simulate replays a script") {
    TempDir tmp;
    std::string exchange = tag_hex(0xe0);
    std::string alice = tag_hex(0xa1);
    std::string bob = tag_hex(0xb0);
    std::string script = tmp.write("script.csv", "op,from,to,amount\n"
                                                 "mint,," + exchange + ",1000\n"
                                                 "set_exchange,," + exchange + ",1\n"
                                                 "transfer," + exchange + "," + alice + ",250\n"
                                                 "transfer," + alice + "," + bob + ",100,1\n");
    std::string state_file = tmp.file("state.json");
    CliResult sim = run_cli("ledger simulate --script " + script + " --out " + state_file);
    CHECK(sim.code == 0);
    CHECK(sim.err == "applied 4 ops; 3 accounts\n");
    nlohmann::json state = nlohmann::json::parse(read_file(state_file));
    CHECK(state[exchange]["balance"] == "750.000000");
    CHECK(state[exchange]["is_exchange"] == true);
    CHECK(state[alice]["balance"] == "150.000000");
    CHECK(state[alice]["is_eai"] == true);
    CHECK(state[bob]["balance"] == "100.000000");
    CHECK(state[bob]["is_eai"] == false); // suppress flag held the EAI mark back

    CliResult to_stdout = run_cli("ledger simulate --script " + script);
    CHECK(to_stdout.code == 0);
    CHECK(nlohmann::json::parse(to_stdout.out) == state);

    std::string burn = tmp.write("burn.csv", "op,from,to,amount\n"
                                             "mint," + alice + "," + bob + ",5\n");
    CliResult bad = run_cli("ledger simulate --script " + burn);
    CHECK(bad.code == 1);
    CHECK(bad.err.find("script line 2") != std::string::npos);

    CHECK(run_cli("ledger simulate --script " + tmp.file("absent.csv")).code == 2);
}

TEST_CASE("cli: gas estimates and cost table") {
    CliResult onchain = run_cli("gas estimate --method onchain --op is_eai");
    CHECK(onchain.code == 0);
    nlohmann::json j = nlohmann::json::parse(onchain.out);
    CHECK(j["method"] == "onchain");
    CHECK(j["op"] == "is_eai");
    CHECK(j["gas"] == 612);
    CHECK(j["usd"] == "0.03");
    CHECK(!j.contains("n"));

    nlohmann::json merkle =
        nlohmann::json::parse(run_cli("gas estimate --method merkle --op is_eai --n 30000").out);
    CHECK(merkle["gas"] == 8112);
    CHECK(merkle["n"] == 30000);

    nlohmann::json transfer =
        nlohmann::json::parse(run_cli("gas estimate --method merkle --op transfer --n 500").out);
    CHECK(transfer["gas"] == 75635);

    nlohmann::json add = nlohmann::json::parse(
        run_cli("gas estimate --method onchain --op add_addresses --k 10").out);
    CHECK(add["gas"] == 479170);
    CHECK(add["k"] == 10);

    CHECK(run_cli("gas estimate --method onchain --op add_addresses").code == 1);
    CHECK(run_cli("gas estimate --method smoke-signal --op is_eai").code == 1);

    CliResult table = run_cli("gas table");
    CHECK(table.code == 0);
    CHECK(table.out.find("onchain") != std::string::npos);
    CHECK(table.out.find("offchain") != std::string::npos);
    CHECK(table.out.find("merkle") != std::string::npos);
    CHECK(table.out.find("2250000") != std::string::npos);

    // Doubling the gas price through a params file doubles the USD figure.
    eai_gas_params* params = nullptr;
    REQUIRE(eai_gas_params_default(&params) == EAI_OK);
    eai::test::CStr params_json;
    REQUIRE(eai_gas_params_json(params, params_json.out()) == EAI_OK);
    eai_gas_params_free(params);
    nlohmann::json tweaked = nlohmann::json::parse(params_json.str());
    tweaked["gas_price_gwei"] = tweaked["gas_price_gwei"].get<double>() * 2;
    TempDir tmp;
    std::string params_file = tmp.write("params.json", tweaked.dump());
    nlohmann::json dearer = nlohmann::json::parse(
        run_cli("gas estimate --method onchain --op is_eai --params " + params_file).out);
    CHECK(dearer["gas"] == 612);
    CHECK(dearer["usd"] == "0.06");

    CHECK(run_cli("gas estimate --method onchain --op is_eai --params " +
                  tmp.file("absent.json"))
              .code == 2);
}

} // namespace
