"""Named sets, mappings and printed tables of the worked examples."""
