#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fivestar/errors.hpp"

namespace fivestar {

struct Triple {
    std::uint32_t head = 0;
    std::uint32_t relation = 0;
    std::uint32_t tail = 0;

    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Entity and relation name <-> id bijections. Ids are dense and assigned in
/// first-appearance order. Reciprocal relation ids live in
/// [n_relations_base, n_relations_total) and reuse the base name with an
/// "_reciprocal" suffix.
class Vocab {
public:
    std::uint32_t add_entity(const std::string& name);
    std::uint32_t add_relation(const std::string& name);

    std::optional<std::uint32_t> entity_id(const std::string& name) const;
    std::optional<std::uint32_t> relation_id(const std::string& name) const;

    const std::string& entity_name(std::uint32_t id) const;
    std::string relation_name(std::uint32_t id) const;

    std::size_t n_entities() const { return entity_names_.size(); }
    std::size_t n_relations_base() const { return relation_names_.size(); }
    std::size_t n_relations_total() const { return reciprocal_ ? 2 * relation_names_.size() : relation_names_.size(); }
    bool has_reciprocals() const { return reciprocal_; }
    void mark_reciprocal() { reciprocal_ = true; }

    std::span<const std::string> entity_names() const { return entity_names_; }
    std::span<const std::string> base_relation_names() const { return relation_names_; }

private:
    std::vector<std::string> entity_names_;
    std::vector<std::string> relation_names_;
    std::unordered_map<std::string, std::uint32_t> entity_ids_;
    std::unordered_map<std::string, std::uint32_t> relation_ids_;
    bool reciprocal_ = false;
};

struct SplitDataset {
    Vocab vocab;
    std::vector<Triple> train;
    std::vector<Triple> valid;
    std::vector<Triple> test;
    bool reciprocals_added = false;
};

enum class Split { Train, Valid, Test };

std::span<const Triple> split_of(const SplitDataset& ds, Split split);

/// Reads train.txt/valid.txt/test.txt (tab-separated "head relation tail",
/// UTF-8, no header) from a directory. The vocabulary covers the union of
/// the three splits.
SplitDataset load_split(const std::filesystem::path& directory);

/// Appends (t, r + n_relations_base, h) to train for every train triple
/// (h, r, t) and doubles the relation id space. Valid/test are untouched;
/// their reverse queries are formed at evaluation time.
void add_reciprocals(SplitDataset& ds);

/// Known-true tails per (head, relation) over train ∪ valid ∪ test, with
/// the reciprocal forms of valid/test triples included. Candidate lists are
/// sorted and deduplicated.
class FilterIndex {
public:
    static FilterIndex build(const SplitDataset& ds);

    std::span<const std::uint32_t> tails(std::uint32_t head, std::uint32_t relation) const;
    bool contains(std::uint32_t head, std::uint32_t relation, std::uint32_t tail) const;
    std::size_t size() const { return map_.size(); }

private:
    static std::uint64_t key(std::uint32_t head, std::uint32_t relation) {
        return (static_cast<std::uint64_t>(head) << 32) | relation;
    }
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> map_;
};

/// The loop-closing positive probe and the path-closing negative probe of
/// the synthetic path/loop knowledge graph.
struct ProbeTriples {
    Triple loop_probe; // (t_L, r3, t_1), present in train
    Triple path_probe; // (h_P, r3, h_1), absent from train
};

struct SyntheticDataset {
    SplitDataset data; // train only; valid/test empty
    ProbeTriples probes;
};

/// Builds the synthetic KG with a path h_1..h_P under r1 (no closing edge),
/// a loop t_1..t_L under r3 (with the closing edge), and bridges h_i -r2-> t_i.
/// Train-triple order is shuffled with the seed; ids are order-independent.
SyntheticDataset generate_path_loop(std::size_t path_len, std::size_t loop_len, std::uint64_t seed = 0);

/// Writes train.txt plus valid.txt/test.txt holding the two probe triples,
/// and probes.json naming them.
void write_synthetic(const SyntheticDataset& synth, const std::filesystem::path& directory);

/// Re-encodes a dataset's triples through an existing vocabulary (e.g. the
/// one stored with a checkpoint). Throws Error on unknown names.
SplitDataset reencode_with_vocab(const SplitDataset& ds, const Vocab& vocab);

} // namespace fivestar
