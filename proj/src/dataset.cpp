#include "fivestar/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fivestar/rng.hpp"

namespace fivestar {

std::uint32_t Vocab::add_entity(const std::string& name) {
    auto it = entity_ids_.find(name);
    if (it != entity_ids_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(entity_names_.size());
    entity_names_.push_back(name);
    entity_ids_.emplace(name, id);
    return id;
}

std::uint32_t Vocab::add_relation(const std::string& name) {
    auto it = relation_ids_.find(name);
    if (it != relation_ids_.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(relation_names_.size());
    relation_names_.push_back(name);
    relation_ids_.emplace(name, id);
    return id;
}

std::optional<std::uint32_t> Vocab::entity_id(const std::string& name) const {
    auto it = entity_ids_.find(name);
    if (it == entity_ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::uint32_t> Vocab::relation_id(const std::string& name) const {
    auto it = relation_ids_.find(name);
    if (it == relation_ids_.end()) return std::nullopt;
    return it->second;
}

const std::string& Vocab::entity_name(std::uint32_t id) const {
    if (id >= entity_names_.size()) throw Error("Vocab: entity id out of range");
    return entity_names_[id];
}

std::string Vocab::relation_name(std::uint32_t id) const {
    const std::size_t base = relation_names_.size();
    if (id < base) return relation_names_[id];
    if (reciprocal_ && id < 2 * base) return relation_names_[id - base] + "_reciprocal";
    throw Error("Vocab: relation id out of range");
}

std::span<const Triple> split_of(const SplitDataset& ds, Split split) {
    switch (split) {
        case Split::Train: return ds.train;
        case Split::Valid: return ds.valid;
        case Split::Test: return ds.test;
    }
    return {};
}

namespace {

void load_file(const std::filesystem::path& file, Vocab& vocab, std::vector<Triple>& out) {
    std::ifstream in(file);
    if (!in) throw MissingFile("missing split file: " + file.string());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab1 = line.find('\t');
        const auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        const auto tab3 = tab2 == std::string::npos ? std::string::npos : line.find('\t', tab2 + 1);
        if (tab1 == std::string::npos || tab2 == std::string::npos || tab3 != std::string::npos) {
            throw MalformedLine(file.string() + ":" + std::to_string(lineno) +
                                ": expected 3 tab-separated fields");
        }
        Triple t;
        t.head = vocab.add_entity(line.substr(0, tab1));
        t.relation = vocab.add_relation(line.substr(tab1 + 1, tab2 - tab1 - 1));
        t.tail = vocab.add_entity(line.substr(tab2 + 1));
        out.push_back(t);
    }
    if (out.empty()) throw EmptySplit("split file has no triples: " + file.string());
}

} // namespace

SplitDataset load_split(const std::filesystem::path& directory) {
    SplitDataset ds;
    load_file(directory / "train.txt", ds.vocab, ds.train);
    load_file(directory / "valid.txt", ds.vocab, ds.valid);
    load_file(directory / "test.txt", ds.vocab, ds.test);
    return ds;
}

void add_reciprocals(SplitDataset& ds) {
    if (ds.reciprocals_added) throw AlreadyAugmented("reciprocals already added");
    const auto base = static_cast<std::uint32_t>(ds.vocab.n_relations_base());
    const std::size_t n = ds.train.size();
    ds.train.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const Triple& t = ds.train[i];
        ds.train.push_back({t.tail, t.relation + base, t.head});
    }
    ds.vocab.mark_reciprocal();
    ds.reciprocals_added = true;
}

FilterIndex FilterIndex::build(const SplitDataset& ds) {
    FilterIndex index;
    const auto base = static_cast<std::uint32_t>(ds.vocab.n_relations_base());
    auto insert = [&index](std::uint32_t h, std::uint32_t r, std::uint32_t t) {
        index.map_[key(h, r)].push_back(t);
    };
    for (const Triple& t : ds.train) insert(t.head, t.relation, t.tail);
    for (const auto* split : {&ds.valid, &ds.test}) {
        for (const Triple& t : *split) {
            insert(t.head, t.relation, t.tail);
            insert(t.tail, t.relation + base, t.head);
        }
    }
    for (auto& [k, tails] : index.map_) {
        std::sort(tails.begin(), tails.end());
        tails.erase(std::unique(tails.begin(), tails.end()), tails.end());
    }
    return index;
}

std::span<const std::uint32_t> FilterIndex::tails(std::uint32_t head, std::uint32_t relation) const {
    auto it = map_.find(key(head, relation));
    if (it == map_.end()) return {};
    return it->second;
}

bool FilterIndex::contains(std::uint32_t head, std::uint32_t relation, std::uint32_t tail) const {
    const auto t = tails(head, relation);
    return std::binary_search(t.begin(), t.end(), tail);
}

SyntheticDataset generate_path_loop(std::size_t path_len, std::size_t loop_len, std::uint64_t seed) {
    if (path_len < 3 || loop_len < 3) throw std::invalid_argument("generate_path_loop: lengths must be >= 3");
    SyntheticDataset synth;
    Vocab& vocab = synth.data.vocab;

    std::vector<std::uint32_t> h(path_len), t(loop_len);
    for (std::size_t i = 0; i < path_len; ++i) h[i] = vocab.add_entity("h" + std::to_string(i + 1));
    for (std::size_t i = 0; i < loop_len; ++i) t[i] = vocab.add_entity("t" + std::to_string(i + 1));
    const std::uint32_t r1 = vocab.add_relation("r1");
    const std::uint32_t r2 = vocab.add_relation("r2");
    const std::uint32_t r3 = vocab.add_relation("r3");

    auto& train = synth.data.train;
    for (std::size_t i = 0; i + 1 < path_len; ++i) train.push_back({h[i], r1, h[i + 1]});
    for (std::size_t i = 0; i < loop_len; ++i) train.push_back({t[i], r3, t[(i + 1) % loop_len]});
    const std::size_t bridges = std::min(path_len, loop_len);
    for (std::size_t i = 0; i < bridges; ++i) train.push_back({h[i], r2, t[i]});

    RandomEngine rng(seed);
    rng.shuffle(train);

    synth.probes.loop_probe = {t[loop_len - 1], r3, t[0]};
    synth.probes.path_probe = {h[path_len - 1], r3, h[0]};
    return synth;
}

void write_synthetic(const SyntheticDataset& synth, const std::filesystem::path& directory) {
    std::filesystem::create_directories(directory);
    const Vocab& vocab = synth.data.vocab;
    auto line = [&vocab](const Triple& t) {
        return vocab.entity_name(t.head) + "\t" + vocab.relation_name(t.relation) + "\t" +
               vocab.entity_name(t.tail) + "\n";
    };
    {
        std::ofstream out(directory / "train.txt");
        if (!out) throw Error("cannot write " + (directory / "train.txt").string());
        for (const Triple& t : synth.data.train) out << line(t);
    }
    // The probe triples double as valid/test so the directory round-trips
    // through load_split.
    for (const char* name : {"valid.txt", "test.txt"}) {
        std::ofstream out(directory / name);
        if (!out) throw Error("cannot write " + (directory / name).string());
        out << line(synth.probes.loop_probe);
        out << line(synth.probes.path_probe);
    }
    nlohmann::json probes;
    auto as_json = [&vocab](const Triple& t) {
        return nlohmann::json{{"head", vocab.entity_name(t.head)},
                              {"relation", vocab.relation_name(t.relation)},
                              {"tail", vocab.entity_name(t.tail)}};
    };
    probes["loop_probe"] = as_json(synth.probes.loop_probe);
    probes["path_probe"] = as_json(synth.probes.path_probe);
    std::ofstream out(directory / "probes.json");
    if (!out) throw Error("cannot write " + (directory / "probes.json").string());
    out << probes.dump(2) << "\n";
}

SplitDataset reencode_with_vocab(const SplitDataset& ds, const Vocab& vocab) {
    SplitDataset out;
    out.vocab = vocab;
    auto encode = [&](const std::vector<Triple>& in, std::vector<Triple>& dst) {
        dst.reserve(in.size());
        for (const Triple& t : in) {
            const auto h = vocab.entity_id(ds.vocab.entity_name(t.head));
            const auto r = vocab.relation_id(ds.vocab.relation_name(t.relation));
            const auto tl = vocab.entity_id(ds.vocab.entity_name(t.tail));
            if (!h || !r || !tl) {
                throw Error("reencode_with_vocab: name not present in target vocabulary: " +
                            ds.vocab.entity_name(t.head) + " / " + ds.vocab.relation_name(t.relation) +
                            " / " + ds.vocab.entity_name(t.tail));
            }
            dst.push_back({*h, *r, *tl});
        }
    };
    encode(ds.train, out.train);
    encode(ds.valid, out.valid);
    encode(ds.test, out.test);
    return out;
}

} // namespace fivestar
