#include "mackit/cache.hpp"

#include <fstream>

namespace mackit {

namespace fs = std::filesystem;

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
}

fs::path DiskCache::p_file(long weight) const {
    return dir_ / ("mackit-P-w" + std::to_string(weight) + ".json");
}

fs::path DiskCache::kostka_file(KostkaVariant v, long weight) const {
    return dir_ / ("mackit-kostka-" + kostka_variant_name(v) + "-w" + std::to_string(weight) +
                   ".json");
}

std::optional<Json> DiskCache::read_file(const fs::path& path, const std::string& family) const {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Json j;
    try {
        in >> j;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (!j.is_object() || j.value("schema", -1) != kSchemaVersion) return std::nullopt;
    if (j.value("family", "") != family) return std::nullopt;
    return j;
}

void DiskCache::write_file(const fs::path& path, const Json& payload) const {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << payload.dump(1) << "\n";
    }
    fs::rename(tmp, path);
}

bool DiskCache::load_P(long weight, std::vector<PRecord>& out) {
    auto j = read_file(p_file(weight), "P");
    if (!j) return false;
    try {
        for (const auto& e : j->at("entries")) {
            out.emplace_back(partition_from_json(e.at("part")), symfunc_from_json(e.at("value")),
                             rational_from_json(e.at("norm")));
        }
    } catch (const std::exception&) {
        out.clear();
        return false;
    }
    return true;
}

void DiskCache::store_P(long weight, const std::vector<PRecord>& records) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["family"] = "P";
    j["weight"] = weight;
    Json entries = Json::array();
    for (const auto& [part, value, norm] : records) {
        Json e;
        e["part"] = to_json(part);
        e["value"] = to_json(value);
        e["norm"] = to_json(norm);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    write_file(p_file(weight), j);
}

bool DiskCache::load_kostka(KostkaVariant v, long weight, KostkaMatrix& out) {
    auto j = read_file(kostka_file(v, weight), "kostka");
    if (!j) return false;
    try {
        out = kostka_from_json(j->at("matrix"));
    } catch (const std::exception&) {
        return false;
    }
    return out.weight == weight && out.variant == v;
}

void DiskCache::store_kostka(const KostkaMatrix& m) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["family"] = "kostka";
    j["weight"] = m.weight;
    j["matrix"] = to_json(m);
    write_file(kostka_file(m.variant, m.weight), j);
}

std::vector<DiskCache::FileStat> DiskCache::stats() const {
    std::vector<FileStat> out;
    if (!fs::exists(dir_)) return out;
    for (const auto& entry : fs::directory_iterator(dir_)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("mackit-", 0) != 0 || entry.path().extension() != ".json") continue;
        FileStat st;
        st.name = name;
        st.bytes = entry.file_size();
        std::ifstream in(entry.path());
        Json j;
        try {
            in >> j;
            st.valid = j.value("schema", -1) == kSchemaVersion;
            st.family = j.value("family", "");
            st.weight = j.value("weight", 0L);
            if (j.contains("entries")) st.entries = static_cast<long>(j["entries"].size());
            else if (j.contains("matrix")) st.entries = static_cast<long>(j["matrix"]["rows"].size());
        } catch (const std::exception&) {
            st.valid = false;
        }
        out.push_back(std::move(st));
    }
    std::sort(out.begin(), out.end(),
              [](const FileStat& a, const FileStat& b) { return a.name < b.name; });
    return out;
}

long DiskCache::clear() {
    long removed = 0;
    if (!fs::exists(dir_)) return removed;
    std::vector<fs::path> victims;
    for (const auto& entry : fs::directory_iterator(dir_)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("mackit-", 0) == 0 && entry.path().extension() == ".json")
            victims.push_back(entry.path());
    }
    for (const auto& p : victims) {
        if (fs::remove(p)) ++removed;
    }
    return removed;
}

} // namespace mackit
