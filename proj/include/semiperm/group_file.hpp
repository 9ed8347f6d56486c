#pragma once

#include <string>  // for string
#include <vector>  // for vector

#include <nlohmann/json.hpp>

#include "corpus.hpp"
#include "group.hpp"

namespace semiperm {

  // A permutation group on 1..degree as written in a group file: a JSON
  // object with "degree" and either "generators" (cycle notation strings)
  // or "images" (1-based image arrays); "name" is optional.
  struct GroupFile {
    std::string name = "unnamed";
    std::size_t degree = 1;
    std::vector<std::string> generators;  // normalized cycle notation
  };

  inline GroupFile parse_group_file(std::string const& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw InvalidArgument(std::string("group file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("degree") || !j["degree"].is_number_unsigned()
        || j["degree"].get<std::size_t>() == 0) {
      throw InvalidArgument("group file needs a positive integer \"degree\"");
    }
    GroupFile gf;
    gf.degree = j["degree"].get<std::size_t>();
    if (j.contains("name")) {
      if (!j["name"].is_string()) {
        throw InvalidArgument("group file \"name\" must be a string");
      }
      gf.name = j["name"].get<std::string>();
    }
    bool const has_cycles = j.contains("generators");
    bool const has_images = j.contains("images");
    if (has_cycles == has_images) {
      throw InvalidArgument("group file needs exactly one of \"generators\" or \"images\"");
    }
    if (has_cycles) {
      if (!j["generators"].is_array()) {
        throw InvalidArgument("\"generators\" must be an array of strings");
      }
      for (auto const& g : j["generators"]) {
        if (!g.is_string()) {
          throw InvalidArgument("\"generators\" must be an array of strings");
        }
        gf.generators.push_back(
            Perm::from_cycles(g.get<std::string>(), gf.degree).to_cycles());
      }
    } else {
      if (!j["images"].is_array()) {
        throw InvalidArgument("\"images\" must be an array of integer arrays");
      }
      for (auto const& row : j["images"]) {
        if (!row.is_array() || row.size() != gf.degree) {
          throw InvalidArgument("each image array must have length " + std::to_string(gf.degree));
        }
        std::vector<std::int64_t> img;
        for (auto const& x : row) {
          if (!x.is_number_integer()) {
            throw InvalidArgument("image entries must be integers");
          }
          img.push_back(x.get<std::int64_t>());
        }
        gf.generators.push_back(Perm::from_one_based(img).to_cycles());
      }
    }
    return gf;
  }

  inline Group to_group(GroupFile const& gf) {
    std::vector<Perm> gens;
    for (auto const& s : gf.generators) {
      gens.push_back(Perm::from_cycles(s, gf.degree));
    }
    return Group(gf.degree, std::move(gens));
  }

  inline NamedGroup load_group_file(std::string const& text, std::string const& provenance) {
    GroupFile gf = parse_group_file(text);
    return NamedGroup{gf.name, to_group(gf), provenance, 0};
  }

  inline std::string write_group_file(NamedGroup const& ng) {
    nlohmann::json j;
    j["name"] = ng.name;
    j["degree"] = ng.group.degree();
    j["generators"] = nlohmann::json::array();
    for (auto const& g : ng.group.generators()) {
      j["generators"].push_back(g.to_cycles());
    }
    return j.dump(2) + "\n";
  }

}  // namespace semiperm
