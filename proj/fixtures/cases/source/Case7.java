// Case7: the type is an interface
public interface Case7 {
    void m1();

    void m2();

    void m3();
}
