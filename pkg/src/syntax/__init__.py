"""Literal parsers and printers"""
