// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The vanetstat Authors
#include "vanetstat/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "vanetstat/format.hpp"

namespace vanetstat {

namespace {

std::string trim(std::string_view s)
{
    auto const first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    auto const last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::uint64_t parse_u64(std::string const& key, std::string const& text)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(key + " must be a non-negative integer, got '" + text + "'");
    try {
        return std::stoull(text);
    } catch (std::out_of_range const&) {
        throw std::invalid_argument(key + " is out of range: '" + text + "'");
    }
}

bool parse_bool(std::string const& key, std::string const& text)
{
    if (text == "true" || text == "1" || text == "yes")
        return true;
    if (text == "false" || text == "0" || text == "no")
        return false;
    throw std::invalid_argument(key + " must be true or false, got '" + text + "'");
}

std::set<std::string> const kScalarKeys = {
    "n", "p", "trials", "seed", "threads", "link_draw", "format", "out", "compare", "spacing"};

}  // namespace

KeyValues parse_config_text(std::string_view text)
{
    KeyValues kv;
    std::istringstream is{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        std::string const t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        auto const eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no)
                                        + " is not key = value: '" + t + "'");
        std::string key = trim(std::string_view(t).substr(0, eq));
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(line_no) + " has no key");
        kv[key] = trim(std::string_view(t).substr(eq + 1));
    }
    return kv;
}

KeyValues load_config_file(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

RunConfig resolve_config(KeyValues const& kv)
{
    RunConfig cfg;
    KeyValues spacing_keys, channel_keys;
    for (auto const& [key, value] : kv) {
        if (key.rfind("spacing.", 0) == 0)
            spacing_keys[key] = value;
        else if (key.rfind("channel.", 0) == 0)
            channel_keys[key] = value;
        else if (!kScalarKeys.contains(key))
            throw std::invalid_argument("unknown config key '" + key + "'");
    }

    auto get = [&](std::string const& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end() || it->second.empty())
            return std::nullopt;
        return it->second;
    };

    auto n_text = get("n");
    if (!n_text)
        throw std::invalid_argument("the vehicle count n is required");
    std::uint64_t const n = parse_u64("n", *n_text);
    if (n < 2 || n > (1u << 20))
        throw std::invalid_argument("n must be in [2, 1048576]");
    cfg.n = static_cast<int>(n);

    if (auto p = get("p")) {
        Rational value = parse_rational(*p);
        if (value < 0 || value > 1)
            throw std::invalid_argument("p must be in [0, 1], got " + *p);
        cfg.fixed_p = value;
    }
    if (auto compact = get("spacing")) {
        if (!spacing_keys.empty())
            throw std::invalid_argument("give spacing either compactly or as spacing.* keys");
        cfg.spacing = SpacingModel::parse(*compact);
    } else if (!spacing_keys.empty()) {
        cfg.spacing = SpacingModel::from_config(spacing_keys);
    }
    if (cfg.fixed_p && cfg.spacing)
        throw std::invalid_argument("give either p or a spacing model, not both");
    if (!cfg.fixed_p && !cfg.spacing)
        throw std::invalid_argument("give either p or a spacing model");
    cfg.channel = ChannelParams::from_config(channel_keys);

    if (auto t = get("trials")) {
        cfg.trials = parse_u64("trials", *t);
        if (cfg.trials == 0)
            throw std::invalid_argument("trials must be at least 1");
    }
    if (auto s = get("seed"))
        cfg.seed = parse_u64("seed", *s);
    if (auto t = get("threads"))
        cfg.threads = static_cast<unsigned>(parse_u64("threads", *t));
    if (auto d = get("link_draw"))
        cfg.link_draw = parse_link_draw(*d);
    if (auto f = get("format")) {
        if (*f == "csv")
            cfg.format = OutputFormat::csv;
        else if (*f == "json")
            cfg.format = OutputFormat::json;
        else
            throw std::invalid_argument("format must be csv or json, got '" + *f + "'");
    }
    if (auto o = get("out"))
        cfg.output_path = *o;
    if (auto c = get("compare"))
        cfg.compare = parse_bool("compare", *c);
    return cfg;
}

KeyValues RunConfig::resolved() const
{
    KeyValues kv;
    kv["n"] = std::to_string(n);
    if (fixed_p)
        kv["p"] = fixed_p->get_str();
    if (spacing) {
        kv.merge(spacing->to_config());
        kv.merge(channel.to_config());
    }
    kv["trials"] = std::to_string(trials);
    kv["seed"] = std::to_string(seed);
    kv["link_draw"] = std::string(to_string(link_draw));
    kv["format"] = format == OutputFormat::csv ? "csv" : "json";
    if (output_path)
        kv["out"] = output_path->string();
    kv["compare"] = compare ? "true" : "false";
    return kv;
}

Scenario RunConfig::scenario() const
{
    Scenario sc;
    sc.n = n;
    sc.trials = trials;
    sc.seed = seed;
    if (spacing)
        sc.link = PhysicalLink{channel, *spacing, link_draw};
    else
        sc.link = FixedLink{to_double(*fixed_p)};
    return sc;
}

}  // namespace vanetstat
