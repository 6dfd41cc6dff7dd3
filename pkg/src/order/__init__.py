"""Data types, values, ideals and downsets"""
