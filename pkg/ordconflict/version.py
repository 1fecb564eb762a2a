"""Contains name, version, and description."""

NAME = "ordconflict"
VERSION = "0.1.0"
DESCRIPTION = "Conflict graphs of ordered graphs: solvers and closed forms"
