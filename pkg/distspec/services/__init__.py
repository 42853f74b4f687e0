# Services: one per functional area (graphs, metric, spectral, charpoly, enumeration, extremal)
