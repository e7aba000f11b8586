#include "mfg.h"

#include "mfg/config.hpp"
#include "mfg/runner.hpp"

#include <cstring>
#include <exception>
#include <new>
#include <string>

struct mfg_config {
    mfg::FullConfig cfg;
};

namespace {

void put_msg(char* buf, size_t len, const std::string& msg)
{
    if (!buf || len == 0)
        return;
    const size_t n = msg.size() < len - 1 ? msg.size() : len - 1;
    std::memcpy(buf, msg.data(), n);
    buf[n] = '\0';
}

template <typename Fn> int guarded(char* errbuf, size_t errlen, Fn&& fn)
{
    try {
        return fn();
    } catch (const std::exception& e) {
        put_msg(errbuf, errlen, e.what());
        return 1;
    } catch (...) {
        put_msg(errbuf, errlen, "unknown error");
        return 1;
    }
}

} // namespace

extern "C" {

int mfg_config_load(const char* path, mfg_config** out, char* errbuf, size_t errlen)
{
    if (!path || !out) {
        put_msg(errbuf, errlen, "null argument");
        return 1;
    }
    return guarded(errbuf, errlen, [&] {
        auto* handle = new mfg_config{mfg::load_config(path)};
        *out = handle;
        return 0;
    });
}

int mfg_config_parse(const char* text, mfg_config** out, char* errbuf, size_t errlen)
{
    if (!text || !out) {
        put_msg(errbuf, errlen, "null argument");
        return 1;
    }
    return guarded(errbuf, errlen, [&] {
        auto* handle = new mfg_config{mfg::parse_config(text)};
        *out = handle;
        return 0;
    });
}

void mfg_config_free(mfg_config* cfg)
{
    delete cfg;
}

int mfg_run(const mfg_config* cfg, const char* command, const char* out_dir,
            unsigned long long seed_override, int threads, char* msgbuf, size_t msglen)
{
    if (!cfg || !command || !out_dir) {
        put_msg(msgbuf, msglen, "null argument");
        return 1;
    }
    return guarded(msgbuf, msglen, [&] {
        std::string message;
        std::optional<std::uint64_t> seed;
        if (seed_override != 0)
            seed = seed_override;
        const int status
            = mfg::run_command(cfg->cfg, command, out_dir, seed, threads, message);
        put_msg(msgbuf, msglen, message);
        return status;
    });
}

long mfg_config_serialize(const mfg_config* cfg, char* buf, size_t buflen)
{
    if (!cfg)
        return -1;
    try {
        const std::string text = mfg::serialize_config(cfg->cfg);
        put_msg(buf, buflen, text);
        return static_cast<long>(text.size());
    } catch (...) {
        return -1;
    }
}

const char* mfg_version(void)
{
    return "1.0.0";
}

} // extern "C"
