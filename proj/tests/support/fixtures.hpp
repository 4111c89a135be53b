#pragma once

// The bundled sample dataset, in code, for tests that do not read files.

#include <string>
#include <vector>

#include "olapcube/cube.hpp"

namespace fixtures {

// Columns: ang, jenj, ps, jenkel; measure jumlah.
inline olapcube::Schema tabel1_schema() {
    return olapcube::Schema{{"ang", "jenj", "ps", "jenkel"}, "jumlah"};
}

inline std::vector<olapcube::FactRow> tabel1_rows() {
    return {
        {{"2000", "5", "11", "p"}, 11}, {{"2000", "5", "11", "w"}, 22},
        {{"2000", "3", "11", "p"}, 12}, {{"2000", "3", "11", "w"}, 13},
        {{"2000", "5", "22", "p"}, 10}, {{"2001", "5", "11", "w"}, 33},
        {{"2001", "5", "11", "p"}, 44}, {{"2001", "3", "11", "w"}, 14},
        {{"2001", "3", "11", "p"}, 15}, {{"2002", "5", "11", "p"}, 55},
        {{"2002", "5", "11", "w"}, 66}, {{"2002", "3", "11", "p"}, 16},
        {{"2002", "3", "11", "w"}, 17},
    };
}

inline olapcube::FactTable tabel1() {
    return olapcube::load_fact_table(tabel1_rows(), tabel1_schema());
}

// Columns: Angkatan, Jenjang, Jenis; measure Jumlah.
inline olapcube::Schema tabel2_schema() {
    return olapcube::Schema{{"Angkatan", "Jenjang", "Jenis"}, "Jumlah"};
}

inline std::vector<olapcube::FactRow> tabel2_rows() {
    return {
        {{"2000", "5", "P"}, 21}, {{"2000", "5", "W"}, 22}, {{"2000", "3", "P"}, 12},
        {{"2000", "3", "W"}, 13}, {{"2001", "5", "P"}, 44}, {{"2001", "5", "W"}, 33},
        {{"2001", "3", "P"}, 15}, {{"2001", "3", "W"}, 14}, {{"2002", "5", "P"}, 55},
        {{"2002", "5", "W"}, 66}, {{"2002", "3", "P"}, 16}, {{"2002", "3", "W"}, 17},
    };
}

inline olapcube::FactTable tabel2() {
    return olapcube::load_fact_table(tabel2_rows(), tabel2_schema());
}

// The sample drill-down link text.
inline std::string drilldown_link_text() {
    return "left(nim,2) = right(ang,2)\n"
           "substr(nim,3,2) = ps\n"
           "substr(nim,5,1) = jenj\n"
           "jenkel = jenkel\n";
}

// Synthetic detail store with exactly `measure` rows per cube cell, built by
// inverting the link: nim = right(ang,2) + ps + jenj + 2-digit serial.
inline olapcube::DetailStore make_detail_store(const olapcube::FactTable& facts) {
    olapcube::DetailStore store;
    store.columns = {"nim", "nama", "jenkel"};
    const auto& dims = facts.schema.dimensions;
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (dims[i] == name) return i;
        }
        return dims.size();
    };
    const std::size_t ang = index_of("ang");
    const std::size_t jenj = index_of("jenj");
    const std::size_t ps = index_of("ps");
    const std::size_t jenkel = index_of("jenkel");
    for (const auto& [key, measure] : facts.cells) {
        for (std::uint64_t serial = 1; serial <= measure; ++serial) {
            char suffix[8];
            std::snprintf(suffix, sizeof(suffix), "%02llu",
                          static_cast<unsigned long long>(serial));
            std::string nim = key[ang].substr(key[ang].size() - 2) + key[ps] + key[jenj] + suffix;
            store.rows.push_back({nim, "mhs" + nim, key[jenkel]});
        }
    }
    return store;
}

}  // namespace fixtures
