// y00sim: command-line front end for the Y-00 / alpha-eta stream cipher
// simulator. Subcommands mirror the library: receiver error rates, attacks,
// entropy audits, key rates, privacy amplification, transcripts, key
// generation, and the consolidated reproduction table.
//
// Exit codes: 0 success, 1 validation error, 2 resource limit,
// 3 reproduction-table failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "y00/attacks.hpp"
#include "y00/config.hpp"
#include "y00/errors.hpp"
#include "y00/experiments.hpp"
#include "y00/infotheory.hpp"
#include "y00/measurement.hpp"
#include "y00/parallel.hpp"
#include "y00/quadrature.hpp"
#include "y00/report.hpp"
#include "y00/reproduce.hpp"
#include "y00/transcript_io.hpp"

namespace {

struct GlobalArgs {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int workers = -1;  // -1 = not given
    std::string out_format;

    y00::ExperimentConfig load() const {
        y00::ExperimentConfig cfg;
        if (!config_path.empty()) cfg = y00::ExperimentConfig::from_json_file(config_path);
        if (seed_set) cfg.master_seed = seed;
        // precedence: flag > environment > config > default
        if (workers >= 0) {
            cfg.workers = workers;
        } else if (const char* env = std::getenv("Y00SIM_WORKERS")) {
            cfg.workers = std::max(0, std::atoi(env));
        }
        if (!out_format.empty()) cfg.out_format = out_format;
        return cfg;
    }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// one-record table in the CSV (header + row) or JSON style
void emit_record(const std::string& format,
                 const std::vector<std::pair<std::string, std::string>>& fields) {
    if (format == "json") {
        nlohmann::json j;
        for (const auto& [k, v] : fields) {
            try {
                std::size_t used = 0;
                const double d = std::stod(v, &used);
                if (used == v.size()) {
                    j[k] = d;
                    continue;
                }
            } catch (...) {
            }
            j[k] = v;
        }
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::string h, r;
    for (const auto& [k, v] : fields) {
        if (!h.empty()) {
            h += ',';
            r += ',';
        }
        h += k;
        r += v;
    }
    std::cout << h << "\n" << r << "\n";
}

std::vector<std::uint8_t> read_bit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open bit file: " + path);
    std::vector<std::uint8_t> bits;
    char ch;
    while (in.get(ch)) {
        if (ch == '0') bits.push_back(0);
        else if (ch == '1') bits.push_back(1);
        else if (ch == '\n' || ch == '\r' || ch == ' ' || ch == '\t') continue;
        else throw std::invalid_argument(std::string("bit file holds non-bit byte '") + ch + "'");
    }
    return bits;
}

std::vector<std::uint8_t> hex_to_bits(const std::string& hex, std::size_t want_bits) {
    const std::size_t want_digits = (want_bits + 3) / 4;
    if (hex.size() != want_digits)
        throw std::invalid_argument("hash seed needs exactly " + std::to_string(want_digits) +
                                    " hex digits for " + std::to_string(want_bits) + " bits");
    std::vector<std::uint8_t> bits;
    bits.reserve(hex.size() * 4);
    for (char ch : hex) {
        int v;
        if (ch >= '0' && ch <= '9') v = ch - '0';
        else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
        else throw std::invalid_argument(std::string("bad hex digit '") + ch + "'");
        for (int b = 3; b >= 0; --b) bits.push_back(std::uint8_t((v >> b) & 1));
    }
    const std::size_t pad = bits.size() - want_bits;
    for (std::size_t i = 0; i < pad; ++i)
        if (bits[i]) throw std::invalid_argument("hash seed has nonzero padding bits");
    bits.erase(bits.begin(), bits.begin() + std::ptrdiff_t(pad));
    return bits;
}

y00::TinyCipherSpec tiny_spec_from_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("tiny cipher config parse error: ") + e.what());
    }
    y00::TinyCipherSpec ts;
    if (j.contains("M")) ts.m = j.at("M").get<int>();
    if (j.contains("klen")) ts.klen = j.at("klen").get<int>();
    if (j.contains("n")) ts.n = j.at("n").get<int>();
    if (j.contains("sectors")) ts.sectors = j.at("sectors").get<int>();
    if (j.contains("alpha0")) ts.alpha0 = j.at("alpha0").get<double>();
    if (j.contains("noise")) {
        const auto s = j.at("noise").get<std::string>();
        if (s == "noiseless") ts.noise = y00::OutcomeModel::noiseless;
        else if (s == "quantized-heterodyne") ts.noise = y00::OutcomeModel::quantized_heterodyne;
        else throw std::invalid_argument("noise must be noiseless or quantized-heterodyne");
    }
    if (j.contains("enc")) {
        const auto s = j.at("enc").get<std::string>();
        if (s == "cyclic-seed") ts.enc = y00::EncBox::cyclic_seed;
        else if (s == "lfsr") ts.enc = y00::EncBox::lfsr;
        else throw std::invalid_argument("enc must be cyclic-seed or lfsr");
    }
    if (ts.enc == y00::EncBox::lfsr) {
        if (j.contains("lfsr")) {
            const auto& l = j.at("lfsr");
            ts.lfsr.degree = l.at("degree").get<int>();
            ts.lfsr.taps = l.at("taps").get<std::vector<int>>();
        } else {
            ts.lfsr = y00::LfsrSpec::primitive_default(ts.klen);
        }
    }
    if (j.contains("prior")) ts.prior = j.at("prior").get<std::vector<double>>();
    return ts;
}

int run_cli(int argc, char** argv) {
    CLI::App app{"Y-00 / alpha-eta coherent-state stream cipher simulator"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalArgs g;
    app.add_option("--config", g.config_path, "JSON config file (flags override its fields)");
    auto* seed_opt = app.add_option("--seed", g.seed, "master seed for all randomness");
    app.add_option("--workers", g.workers, "worker threads (0 = hardware count)");
    app.add_option("--out", g.out_format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // ---- ber ----------------------------------------------------------
    auto* ber = app.add_subcommand("ber", "analytic receiver bit error rates");
    std::string ber_model = "helstrom", ber_form = "exact";
    double ber_s = 7.0;
    ber->add_option("--model", ber_model)
        ->check(CLI::IsMember({"helstrom", "heterodyne", "phase"}));
    ber->add_option("--S", ber_s, "mean photon number");
    ber->add_option("--form", ber_form)->check(CLI::IsMember({"exact", "asymptotic"}));

    auto* ber_mc = ber->add_subcommand("mc", "Monte Carlo heterodyne BER");
    std::string ber_mc_model = "heterodyne";
    double ber_mc_s = 7.0;
    std::uint64_t ber_mc_trials = 1'000'000;
    ber_mc->add_option("--model", ber_mc_model)->check(CLI::IsMember({"heterodyne"}));
    ber_mc->add_option("--S", ber_mc_s, "mean photon number");
    ber_mc->add_option("--trials", ber_mc_trials);

    // ---- attack -------------------------------------------------------
    auto* attack = app.add_subcommand("attack", "eavesdropper attacks");
    attack->require_subcommand(1);

    auto* binarize_cmd = attack->add_subcommand("binarize", "half-plane reduction BER");
    int bz_m = 128;
    double bz_alpha0 = 200.0;
    std::uint64_t bz_n = 1'000'000;
    binarize_cmd->add_option("--M", bz_m);
    binarize_cmd->add_option("--alpha0", bz_alpha0);
    binarize_cmd->add_option("--n", bz_n, "symbols");

    auto* keysearch = attack->add_subcommand("keysearch", "brute-force seed recovery");
    int ks_klen = 16;
    std::vector<int> ks_taps;
    std::uint64_t ks_n = 64;
    double ks_noise = 0.0;
    int ks_top = 10;
    keysearch->add_option("--klen", ks_klen, "seed length in bits (<= 24)");
    keysearch->add_option("--taps", ks_taps, "feedback polynomial exponents");
    keysearch->add_option("--n", ks_n, "known-plaintext length");
    keysearch->add_option("--noise", ks_noise, "binarization flip probability");
    keysearch->add_option("--top", ks_top, "ranked rows to print");

    auto* complexity = attack->add_subcommand("complexity", "running-key search complexity");
    int cx_m = 4096, cx_klen = 4400, cx_lambda = 1;
    double cx_alpha0 = 200.0;
    complexity->add_option("--M", cx_m);
    complexity->add_option("--alpha0", cx_alpha0);
    complexity->add_option("--klen", cx_klen);
    complexity->add_option("--lambda", cx_lambda)->check(CLI::IsMember({1, 2}));

    // ---- entropy ------------------------------------------------------
    auto* entropy = app.add_subcommand("entropy", "information-theoretic audits");
    entropy->require_subcommand(1);

    auto* ent_exact = entropy->add_subcommand("exact", "exact tiny-cipher entropies");
    std::string ent_cfg_path;
    ent_exact->add_option("--config", ent_cfg_path, "tiny cipher JSON spec")->required();

    auto* ent_post = entropy->add_subcommand("posterior", "per-symbol posterior bit entropy");
    int ep_m = 32;
    double ep_alpha0 = 2.6457513110645906;  // sqrt(7)
    bool ep_key_known = false;
    ent_post->add_option("--M", ep_m);
    ent_post->add_option("--alpha0", ep_alpha0);
    ent_post->add_flag("--key-known", ep_key_known);

    // ---- keyrate ------------------------------------------------------
    auto* keyrate = app.add_subcommand("keyrate", "secret key rate from error rates");
    double kr_pe = 0.01, kr_pb = 0.0, kr_raw = 1e9;
    std::string kr_method = "error-count";
    keyrate->add_option("--pe", kr_pe, "Eve's bit error probability")->required();
    keyrate->add_option("--pb", kr_pb, "Bob's bit error probability");
    keyrate->add_option("--raw", kr_raw, "raw bit rate, bits/s");
    keyrate->add_option("--method", kr_method)->check(CLI::IsMember({"error-count", "ck"}));

    // ---- pa -----------------------------------------------------------
    auto* pa = app.add_subcommand("pa", "Toeplitz privacy amplification");
    std::string pa_in, pa_seed_hex, pa_out_path;
    std::size_t pa_outlen = 0;
    pa->add_option("--in", pa_in, "input bit file (0/1 characters)")->required();
    pa->add_option("--outlen", pa_outlen)->required();
    pa->add_option("--hashseed", pa_seed_hex, "hex, in+out-1 bits")->required();
    pa->add_option("--key-out", pa_out_path, "write key bits here instead of stdout");

    // ---- transcript ---------------------------------------------------
    auto* transcript = app.add_subcommand("transcript", "generate a keyed transcript");
    std::string tr_file;
    std::uint64_t tr_n = 0;
    int tr_m = 0;
    double tr_alpha0 = -1.0;
    transcript->add_option("--file", tr_file, "output path")->required();
    auto* tr_n_opt = transcript->add_option("--n", tr_n);
    transcript->add_option("--M", tr_m);
    transcript->add_option("--alpha0", tr_alpha0);

    // ---- keygen -------------------------------------------------------
    auto* keygen = app.add_subcommand("keygen", "simulated or analytic key generation");
    y00::KeygenParams kg;
    bool kg_analytic = false;
    std::string kg_method = "error-count";
    keygen->add_option("--S", kg.s, "mean photon number");
    keygen->add_option("--raw-bits", kg.raw_bits);
    keygen->add_option("--raw-rate", kg.raw_rate);
    keygen->add_option("--M", kg.m, "constellation for the advantage check");
    keygen->add_option("--method", kg_method)->check(CLI::IsMember({"error-count", "ck"}));
    keygen->add_flag("--analytic", kg_analytic, "no sampling; use --pe/--pb");
    keygen->add_option("--pe", kg.p_eve);
    keygen->add_option("--pb", kg.p_bob);

    // ---- reproduce-paper ----------------------------------------------
    auto* repro = app.add_subcommand(
        "reproduce-paper", "run the published-value table with pass/fail checks");
    std::string repro_file;
    repro->add_option("--file", repro_file, "also write the report here");

    CLI11_PARSE(app, argc, argv);
    g.seed_set = seed_opt->count() > 0;

    y00::ExperimentConfig cfg = g.load();
    cfg.validate();
    const std::string format = cfg.out_format;

    if (ber_mc->parsed()) {
        const auto est = y00::heterodyne_ber_mc(ber_mc_s, ber_mc_trials, cfg.master_seed,
                                                cfg.workers);
        emit_record(format, {{"model", ber_mc_model},
                             {"S", fmt(ber_mc_s)},
                             {"trials", std::to_string(est.trials)},
                             {"seed", std::to_string(cfg.master_seed)},
                             {"errors", std::to_string(est.errors)},
                             {"p_hat", fmt(est.p_hat)},
                             {"ci95", fmt(est.ci95)}});
        return 0;
    }
    if (ber->parsed()) {
        double v;
        const y00::Form form =
            ber_form == "exact" ? y00::Form::exact : y00::Form::asymptotic;
        if (ber_model == "helstrom") v = y00::helstrom_error(ber_s, form);
        else if (ber_model == "heterodyne") v = y00::heterodyne_error(ber_s, form);
        else v = y00::phase_error(ber_s);
        emit_record(format, {{"model", ber_model},
                             {"S", fmt(ber_s)},
                             {"form", ber_model == "phase" ? "exact" : ber_form},
                             {"probability", fmt(v)}});
        return 0;
    }

    if (binarize_cmd->parsed()) {
        const auto est =
            y00::binarization_mc(bz_m, bz_alpha0, bz_n, cfg.master_seed, cfg.workers);
        emit_record(format, {{"M", std::to_string(bz_m)},
                             {"alpha0", fmt(bz_alpha0)},
                             {"n", std::to_string(bz_n)},
                             {"seed", std::to_string(cfg.master_seed)},
                             {"errors", std::to_string(est.errors)},
                             {"trials", std::to_string(est.trials)},
                             {"p_hat", fmt(est.p_hat)},
                             {"ci95", fmt(est.ci95)}});
        return 0;
    }

    if (keysearch->parsed()) {
        const y00::LfsrSpec spec = ks_taps.empty() ? y00::LfsrSpec::primitive_default(ks_klen)
                                                   : y00::LfsrSpec{ks_klen, ks_taps};
        spec.validate();
        const y00::Constellation c4(4, 1.0);
        // draw the hidden instance exactly as seed_recovery_trial does
        y00::RngStream rng(cfg.master_seed, y00::sub::trial_base);
        const std::uint64_t nseeds = (std::uint64_t(1) << spec.degree) - 1;
        const std::uint64_t true_seed = 1 + rng.words().first % nseeds;
        std::vector<std::uint8_t> x(ks_n), l(ks_n);
        {
            y00::LfsrStream stream(spec, y00::SeedKey::from_uint(true_seed, spec.degree));
            for (std::uint64_t i = 0; i < ks_n; ++i) {
                const int r = y00::next_basis(stream, c4);
                x[i] = std::uint8_t(rng.uniform() < 0.5);
                int bit = x[i] ^ y00::basis_parity(r);
                if (ks_noise > 0.0 && rng.uniform() < ks_noise) bit ^= 1;
                l[i] = std::uint8_t(bit);
            }
        }
        const auto ranked = y00::seed_recovery_bruteforce(l, x, spec, c4, cfg.workers);
        std::ostream& os = std::cout;
        if (format == "json") {
            nlohmann::json j;
            j["klen"] = ks_klen;
            j["n"] = ks_n;
            j["noise"] = ks_noise;
            j["seed"] = cfg.master_seed;
            j["true_seed"] = true_seed;
            j["table"] = nlohmann::json::array();
            for (int i = 0; i < ks_top && i < int(ranked.size()); ++i)
                j["table"].push_back({{"rank", i + 1},
                                      {"seed", ranked[std::size_t(i)].seed},
                                      {"agreement", ranked[std::size_t(i)].agreement},
                                      {"is_true_seed", ranked[std::size_t(i)].seed == true_seed}});
            os << j.dump(2) << "\n";
        } else {
            os << "# klen=" << ks_klen << " n=" << ks_n << " noise=" << fmt(ks_noise)
               << " seed=" << cfg.master_seed << " true_seed=" << true_seed << "\n";
            os << "rank,seed,agreement,is_true_seed\n";
            for (int i = 0; i < ks_top && i < int(ranked.size()); ++i)
                os << (i + 1) << ',' << ranked[std::size_t(i)].seed << ','
                   << ranked[std::size_t(i)].agreement << ','
                   << (ranked[std::size_t(i)].seed == true_seed ? 1 : 0) << "\n";
        }
        return 0;
    }

    if (complexity->parsed()) {
        const auto sc = y00::search_complexity(cx_m, cx_alpha0, cx_klen, cx_lambda);
        emit_record(format, {{"M", std::to_string(cx_m)},
                             {"alpha0", fmt(cx_alpha0)},
                             {"klen", std::to_string(cx_klen)},
                             {"lambda", std::to_string(cx_lambda)},
                             {"log2_c", fmt(sc.log2_c)},
                             {"degenerate", sc.degenerate ? "1" : "0"}});
        return 0;
    }

    if (ent_exact->parsed()) {
        const auto ts = tiny_spec_from_json(ent_cfg_path);
        const auto er = y00::exact_cipher_entropies(ts);
        emit_record(format, {{"h_x_given_y", fmt(er.h_x_given_y)},
                             {"h_k_given_y", fmt(er.h_k_given_y)},
                             {"h_y_given_xk", fmt(er.h_y_given_xk)},
                             {"h_k", fmt(er.h_k)}});
        return 0;
    }

    if (ent_post->parsed()) {
        const y00::Constellation c(ep_m, ep_alpha0);
        const double h = y00::posterior_bit_entropy(c, ep_key_known);
        emit_record(format, {{"M", std::to_string(ep_m)},
                             {"alpha0", fmt(ep_alpha0)},
                             {"key_known", ep_key_known ? "1" : "0"},
                             {"bits_per_symbol", fmt(h)}});
        return 0;
    }

    if (keyrate->parsed()) {
        const auto method = kr_method == "ck" ? y00::RateMethod::ck
                                              : y00::RateMethod::error_count;
        const auto kr = y00::key_rate(kr_pb, kr_pe, kr_raw, method);
        emit_record(format, {{"p_eve", fmt(kr_pe)},
                             {"p_bob", fmt(kr_pb)},
                             {"raw", fmt(kr_raw)},
                             {"method", kr_method},
                             {"bits_per_second", fmt(kr.bits_per_second)},
                             {"advantage_ok", kr.advantage_ok ? "1" : "0"}});
        return kr.advantage_ok ? 0 : 1;
    }

    if (pa->parsed()) {
        const auto bits = read_bit_file(pa_in);
        if (pa_outlen > bits.size())
            throw std::invalid_argument("--outlen exceeds the input length");
        const std::size_t seed_bits = pa_outlen == 0 ? 0 : bits.size() + pa_outlen - 1;
        const auto hs = pa_outlen == 0 ? std::vector<std::uint8_t>{}
                                       : hex_to_bits(pa_seed_hex, seed_bits);
        const auto key = y00::privacy_amplify(bits, pa_outlen, hs);
        std::string rendered;
        rendered.reserve(key.size());
        for (auto b : key) rendered += char('0' + b);
        if (!pa_out_path.empty()) {
            std::ofstream out(pa_out_path);
            if (!out) throw std::invalid_argument("cannot open --key-out path");
            out << rendered << "\n";
        } else {
            std::cout << rendered << "\n";
        }
        return 0;
    }

    if (transcript->parsed()) {
        if (tr_n_opt->count() > 0) cfg.n = tr_n;
        if (tr_m > 0) cfg.m = tr_m;
        if (tr_alpha0 >= 0.0) cfg.alpha0 = tr_alpha0;
        cfg.transcript_path = tr_file;
        cfg.validate();
        const auto t = y00::make_transcript(cfg);
        y00::save_transcript(t, tr_file);
        std::uint64_t bob_errors = 0;
        for (std::size_t i = 0; i < t.size(); ++i)
            bob_errors += std::uint64_t(t.b_bob[i] != t.x[i]);
        emit_record(format, {{"file", tr_file},
                             {"n", std::to_string(t.size())},
                             {"M", std::to_string(cfg.m)},
                             {"alpha0", fmt(cfg.alpha0)},
                             {"seed", std::to_string(cfg.master_seed)},
                             {"bob_errors", std::to_string(bob_errors)}});
        return 0;
    }

    if (keygen->parsed()) {
        kg.analytic = kg_analytic;
        kg.method = kg_method == "ck" ? y00::RateMethod::ck : y00::RateMethod::error_count;
        kg.master_seed = cfg.master_seed;
        kg.workers = cfg.workers;
        y00::Report rep = y00::run_keygen(kg);
        rep.config_echo_json = cfg.to_json_text();
        std::cout << rep.render(format);
        return rep.all_passed() ? 0 : 1;
    }

    if (repro->parsed()) {
        const y00::Report rep = y00::reproduce_paper(cfg.master_seed, cfg.workers);
        const std::string text = rep.render(format);
        std::cout << text;
        if (!repro_file.empty()) {
            std::ofstream out(repro_file, std::ios::binary);
            if (!out) throw std::invalid_argument("cannot open --file path");
            out << text;
        }
        return rep.all_passed() ? 0 : 3;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const y00::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const y00::QuadratureError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
