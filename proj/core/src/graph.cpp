#include "cactoid/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

#include "cactoid/errors.hpp"

namespace cactoid {

std::size_t CactoidGraph::local_index(std::size_t t, std::size_t v) const {
    const auto& embedding = embeddings_[t];
    for (std::size_t local = 0; local < embedding.size(); ++local) {
        if (embedding[local] == v) {
            return local;
        }
    }
    throw StructuralError("vertex " + labels_[v] + " is not part of block " + ids_[t]);
}

CactoidGraph assemble_graph(std::vector<WeightedBlock> blocks, const Gluing& gluing,
                            std::vector<std::string> ids) {
    if (blocks.empty()) {
        throw StructuralError("graph needs at least one block");
    }
    const std::size_t b = blocks.size();
    if (ids.empty()) {
        ids.reserve(b);
        for (std::size_t t = 0; t < b; ++t) {
            ids.push_back("B" + std::to_string(t + 1));
        }
    }
    if (ids.size() != b) {
        throw StructuralError("block id count does not match block count");
    }
    {
        std::set<std::string> seen;
        for (const std::string& id : ids) {
            if (!seen.insert(id).second) {
                throw StructuralError("duplicate block id '" + id + "'");
            }
        }
    }
    for (const auto& [key, label] : gluing) {
        const auto& [t, name] = key;
        if (t >= b) {
            throw StructuralError("gluing refers to block index " + std::to_string(t) +
                                  " but there are only " + std::to_string(b) + " blocks");
        }
        if (!blocks[t].find_local(name)) {
            throw StructuralError("gluing refers to unknown vertex '" + name + "' of block " +
                                  ids[t]);
        }
        if (label.empty()) {
            throw StructuralError("empty global label in gluing");
        }
    }

    CactoidGraph graph;
    graph.ids_ = std::move(ids);
    std::unordered_map<std::string, std::size_t> index_of;
    graph.embeddings_.resize(b);
    for (std::size_t t = 0; t < b; ++t) {
        const std::vector<std::string> names = blocks[t].local_names();
        auto& embedding = graph.embeddings_[t];
        embedding.reserve(names.size());
        std::set<std::size_t> used;
        for (const std::string& name : names) {
            std::string label;
            if (auto it = gluing.find({t, name}); it != gluing.end()) {
                label = it->second;
            } else {
                label = graph.ids_[t] + "." + name;
            }
            auto [it, inserted] = index_of.try_emplace(label, graph.labels_.size());
            if (inserted) {
                graph.labels_.push_back(label);
            }
            if (!used.insert(it->second).second) {
                throw StructuralError("two vertices of block " + graph.ids_[t] +
                                      " glued to the same label '" + label + "'");
            }
            embedding.push_back(it->second);
        }
    }
    graph.blocks_ = std::move(blocks);

    const std::size_t n = graph.labels_.size();
    graph.block_index_.assign(n, 0);
    graph.home_block_.assign(n, b);
    for (std::size_t t = 0; t < b; ++t) {
        for (std::size_t v : graph.embeddings_[t]) {
            ++graph.block_index_[v];
            if (graph.home_block_[v] == b) {
                graph.home_block_[v] = t;
            }
        }
    }

    // Pairwise intersections: at most one shared vertex per pair of blocks.
    std::vector<std::vector<std::size_t>> blocks_of(n);
    for (std::size_t t = 0; t < b; ++t) {
        for (std::size_t v : graph.embeddings_[t]) {
            blocks_of[v].push_back(t);
        }
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> shared;
    for (std::size_t v = 0; v < n; ++v) {
        const auto& owners = blocks_of[v];
        for (std::size_t i = 0; i < owners.size(); ++i) {
            for (std::size_t j = i + 1; j < owners.size(); ++j) {
                auto key = std::make_pair(owners[i], owners[j]);
                auto [it, inserted] = shared.try_emplace(key, v);
                if (!inserted) {
                    throw NotACactoidError("blocks " + graph.ids_[owners[i]] + " and " +
                                           graph.ids_[owners[j]] + " share vertices '" +
                                           graph.labels_[it->second] + "' and '" +
                                           graph.labels_[v] + "'");
                }
            }
        }
    }

    // The block/cut-vertex incidence structure must be a tree: connected and
    // with exactly (#blocks + #cut vertices - 1) incidences.
    std::size_t cut_vertices = 0;
    std::size_t incidences = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (graph.block_index_[v] >= 2) {
            ++cut_vertices;
            incidences += graph.block_index_[v];
        }
    }
    {
        std::vector<char> visited(b, 0);
        std::queue<std::size_t> frontier;
        frontier.push(0);
        visited[0] = 1;
        std::size_t reached = 1;
        while (!frontier.empty()) {
            const std::size_t t = frontier.front();
            frontier.pop();
            for (std::size_t v : graph.embeddings_[t]) {
                if (graph.block_index_[v] < 2) {
                    continue;
                }
                for (std::size_t s : blocks_of[v]) {
                    if (!visited[s]) {
                        visited[s] = 1;
                        ++reached;
                        frontier.push(s);
                    }
                }
            }
        }
        if (reached != b) {
            throw ConnectivityError("gluing leaves the graph disconnected (" +
                                    std::to_string(reached) + " of " + std::to_string(b) +
                                    " blocks reachable)");
        }
    }
    if (incidences != b + cut_vertices - 1) {
        throw BlockTreeError("block intersection structure is not a tree");
    }

    graph.block_adjacency_.resize(b);
    for (const auto& [pair, v] : shared) {
        graph.block_adjacency_[pair.first].emplace_back(pair.second, v);
        graph.block_adjacency_[pair.second].emplace_back(pair.first, v);
    }
    return graph;
}

}  // namespace cactoid
