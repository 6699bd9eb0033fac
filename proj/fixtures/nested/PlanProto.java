package org.example.plan;

public final class PlanProto {
    private static final String VERSION = "1";

    public static String version() {
        return VERSION;
    }

    public static final class Step {
        private String name;
        private int order;
        private boolean optional;

        public String getName() { return name; }
        public int getOrder() { return order; }
        public boolean isOptional() { return optional; }
        public void clear() {
            name = null;
            order = 0;
        }
    }

    public static final class Node {
        private long id;
        private String label;
        private double weight;

        public long getId() { return id; }
        public String getLabel() { return label; }
        public double getWeight() { return weight; }
    }

    public static final class Edge {
        private long from;
        private long to;

        public long getFrom() { return from; }
        public long getTo() { return to; }
        public boolean isLoop() { return from == to; }
    }
}
