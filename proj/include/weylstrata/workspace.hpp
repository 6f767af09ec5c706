#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

#include "weylstrata/data_files.hpp"
#include "weylstrata/fusion.hpp"
#include "weylstrata/jind.hpp"

namespace weylstrata {

class Workspace;

// Everything attached to one ambient type: roots, group, character table
// and, on demand, Levi classes with their embeddings and fusion maps.
class TypeContext {
public:
    TypeContext(Workspace& ws, CartanType type);

    const CartanType& type() const { return type_; }
    const RootSystem& root_system() const { return *rs_; }
    const GroupContext& group() const { return *group_; }
    const CharacterTable& table() const { return table_; }
    const ClassIdentifier& classes() const { return *ident_; }

    const std::vector<LeviClass>& levis() const;
    const LeviClass& levi(std::string_view name) const { return find_levi(levis(), name); }

    struct LeviData {
        LeviEmbedding emb;
        FusionMap fusion;
    };
    // Embedding and fusion for a subset of simple roots, using the default layout.
    const LeviData& levi_data(const std::vector<int>& subset) const;
    // Uncached, with an explicit layout of the components.
    LeviData make_levi_data(const LeviClass& levi, const SubsystemLayout& layout) const;

    // j_{W_L}^W of an irrep index of the Levi table; returns an ambient irrep index.
    int j_induce(const std::vector<int>& subset, int chi) const;

private:
    Workspace* ws_;
    CartanType type_;
    std::shared_ptr<const RootSystem> rs_;
    std::unique_ptr<GroupContext> group_;
    CharacterTable table_;
    std::unique_ptr<ClassIdentifier> ident_;

    mutable std::mutex mu_;
    mutable std::unique_ptr<std::vector<LeviClass>> levis_;
    mutable std::map<std::vector<int>, std::unique_ptr<LeviData>> levi_cache_;
};

// Access to the data directory plus caches of validated tables and contexts.
class Workspace {
public:
    explicit Workspace(std::filesystem::path data_dir);

    // $WEYLSTRATA_DATA if set, otherwise the directory compiled into the build.
    static std::filesystem::path default_data_dir();

    const std::filesystem::path& data_dir() const { return dir_; }

    // Validated table of a simple type; type A comes from symmetric_table.
    const CharacterTable& component_table(const Component& c);
    // Product of component tables in component order; trivial table for the torus.
    CharacterTable table(const CartanType& t);
    const TypeContext& context(const CartanType& t);

    // Characteristics with Springer data for every component of t. Types
    // made of A components (and the torus) get every characteristic found
    // in the data directory.
    std::vector<int> characteristics(const CartanType& t);
    // Springer image of a simple component, validated against its table.
    const std::vector<std::pair<IrrepLabel, std::string>>& component_springer(const Component& c, int r);

    const StrataClassMap& class_map(const CartanType& t);

private:
    std::filesystem::path dir_;
    std::recursive_mutex mu_;
    std::map<std::string, std::unique_ptr<CharacterTable>> tables_;
    std::map<std::string, std::unique_ptr<TypeContext>> contexts_;
    std::map<std::pair<std::string, int>, std::vector<std::pair<IrrepLabel, std::string>>> springer_;
    std::map<std::string, std::unique_ptr<StrataClassMap>> class_maps_;
    std::unique_ptr<std::set<int>> all_chars_;
};

struct TransitivityResult {
    IrrepLabel direct; // j_{W_L}^W(chi)
    IrrepLabel middle; // j_{W_L}^{W_M}(chi)
    IrrepLabel via;    // j_{W_M}^W(middle)
    bool agree() const { return direct == via; }
};

// Compares the two routes L -> G and L -> M -> G for nested subsets L of M of
// the simple roots of g; chi indexes the table of W_L (default layout).
TransitivityResult check_transitivity(Workspace& ws, const CartanType& g, const std::vector<int>& m,
                                      const std::vector<int>& l, int chi);

} // namespace weylstrata
