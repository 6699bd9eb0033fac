package org.example.metamodel;

import java.util.ArrayList;
import java.util.List;

public class ColumnTypeResolver {
    private final List<String> typeNames = new ArrayList<>();
    private final List<String> fallbacks = new ArrayList<>();
    private int sampleSize;

    public ColumnTypeResolver(int sampleSize) {
        this.sampleSize = sampleSize;
    }

    public String resolve(Object value) {
        String name = lookup(value);
        return name != null ? name : fallback(0);
    }

    public List<String> resolveAll(List<Object> values) {
        List<String> out = new ArrayList<>();
        for (Object value : values.subList(0, Math.min(sampleSize, values.size()))) {
            out.add(resolve(value));
        }
        return out;
    }

    String lookup(Object value) {
        for (String typeName : typeNames) {
            if (matches(typeName, value)) {
                return typeName;
            }
        }
        return null;
    }

    boolean matches(String typeName, Object value) {
        return value != null && typeName.equalsIgnoreCase(value.getClass().getSimpleName());
    }

    String fallback(int index) {
        return index < fallbacks.size() ? fallbacks.get(index) : "VARCHAR";
    }

    public void register(String typeName) {
        typeNames.add(typeName);
        fallbacks.removeIf(f -> f.equals(typeName));
    }

    public int sampleSize() {
        return sampleSize;
    }
}
