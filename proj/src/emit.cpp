#include "bialg/emit.hpp"
#include "bialg/io.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <cstdlib>
#include <unistd.h>

namespace bialg::io {

using Json = nlohmann::ordered_json;

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

InputRecord record_input(const std::filesystem::path& p, const std::string& shown) {
    return {shown, sha256_hex(read_file(p))};
}

namespace {

Json violation_json(const Check& c) {
    if (!c.first_violation) return nullptr;
    const Violation& v = *c.first_violation;
    return Json{{"indices", v.indices}, {"where", v.where}, {"value", format_scalar(v.value)}};
}

}  // namespace

std::string emit_json(const Run& run) {
    Json j = Json::object();
    j["command"] = run.command;
    j["status"] = run.pass() ? "pass" : "fail";
    j["subject"] = run.report.subject;
    Json checks = Json::array();
    for (const Check& c : run.report.checks)
        checks.push_back(Json{{"check_id", c.id},
                              {"residual_norm_is_zero", c.zero},
                              {"evaluated", c.evaluated},
                              {"nonzero", c.nonzero},
                              {"first_violation", violation_json(c)}});
    j["checks"] = checks;
    j["notes"] = run.report.notes;
    Json inputs = Json::array();
    for (const auto& in : run.inputs) inputs.push_back(Json{{"path", in.path}, {"sha256", in.sha256}});
    j["provenance"] = Json{{"tool", "bialg"}, {"version", kToolVersion}, {"format", kFormat}, {"inputs", inputs}};
    if (!run.artifacts.empty()) {
        Json arts = Json::object();
        for (const auto& a : run.artifacts) arts[a.name] = Json::parse(a.json);
        j["artifacts"] = arts;
    }
    return j.dump(2) + "\n";
}

std::string emit_text(const Run& run, bool color) {
    auto paint = [&](const std::string& s, const char* code) {
        return color ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
    };
    std::string out;
    std::string cmd;
    for (const auto& a : run.command) cmd += (cmd.empty() ? "" : " ") + a;
    out += "$ " + cmd + "\n";
    out += run.report.subject + "\n";
    for (const Check& c : run.report.checks) {
        out += "  " + (c.zero ? paint("ok  ", "32") : paint("FAIL", "31")) + "  " + c.id;
        out += "  (" + std::to_string(c.evaluated) + " evaluated";
        if (!c.zero) out += ", " + std::to_string(c.nonzero) + " nonzero";
        out += ")\n";
        if (c.first_violation) {
            const Violation& v = *c.first_violation;
            std::string idx;
            for (auto i : v.indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
            out += "        first violation";
            if (!idx.empty()) out += " [" + idx + "]";
            if (!v.where.empty()) out += " " + v.where;
            out += " = " + format_scalar(v.value) + "\n";
        }
    }
    for (const auto& n : run.report.notes) out += "  note: " + n + "\n";
    for (const auto& in : run.inputs) out += "  input: " + in.path + " sha256:" + in.sha256 + "\n";
    for (const auto& a : run.artifacts) out += "  artifact " + a.name + ":\n" + a.json;
    out += run.pass() ? paint("PASS", "1;32") : paint("FAIL", "1;31");
    out += "\n";
    return out;
}

bool want_color() {
    const char* nc = std::getenv("NO_COLOR");
    if (nc && *nc) return false;
    return isatty(fileno(stdout)) != 0;
}

}  // namespace bialg::io
