#include "mfg.h"

#include <CLI11.hpp>

#include <cstdio>
#include <string>

int main(int argc, char** argv)
{
    CLI::App app{"Spectral solver and bound-verification suite for "
                 "forward-backward mean field games on the torus"};
    app.set_version_flag("--version", mfg_version());

    std::string command;
    std::string config_path;
    std::string out_dir = ".";
    unsigned long long seed = 0;
    int threads = 1;

    app.add_option("command", command,
                   "One of: solve, check-smallness, verify-bounds, "
                   "continuous-dependence, weak-star, oracle-compare")
        ->required();
    app.add_option("--config", config_path, "Path to the config file")->required();
    app.add_option("--out", out_dir, "Output directory for report files");
    app.add_option("--seed", seed, "Override the experiment seed (0 keeps config)");
    app.add_option("--threads", threads,
                   "Parallelism hint; results are identical for any value");

    CLI11_PARSE(app, argc, argv);

    char errbuf[1024] = {0};
    mfg_config* cfg = nullptr;
    if (mfg_config_load(config_path.c_str(), &cfg, errbuf, sizeof errbuf) != 0) {
        std::fprintf(stderr, "error: %s\n", errbuf);
        return 1;
    }

    char msgbuf[1024] = {0};
    const int status = mfg_run(cfg, command.c_str(), out_dir.c_str(), seed, threads,
                               msgbuf, sizeof msgbuf);
    mfg_config_free(cfg);

    std::printf("%s\n", msgbuf);
    if (status != 0)
        std::fprintf(stderr, "exit status %d\n", status);
    return status;
}
